#include <doctest.h>

#include "mz/chars.hpp"

using namespace mz;

namespace {
CharacterGroups groups(long q) { return CharacterGroups(QuadraticExtension::build(FiniteField::build_q(q))); }
}  // namespace

TEST_CASE("character values are roots of unity of the right order") {
  const auto ch = groups(5);
  const MulChar mu = ch.make(false, 1);
  const FieldElement g = ch.base().primitive_root();
  CHECK(ch.value(mu, g) == CycNumber::root_of_unity(24, 6));
  CHECK(ch.value(ch.quadratic_char(), g).as_rational() == Rational(-1));
  CHECK(ch.value(ch.epsilon_E(), ch.ext().primitive_root()).as_rational() == Rational(-1));
}

TEST_CASE("orbit enumerations have the expected sizes") {
  for (long q : {2, 3, 4, 5, 7, 8, 9, 16, 25}) {
    const auto ch = groups(q);
    const long m = q % 2 ? (q - 3) / 2 : (q - 2) / 2;
    const long n = q % 2 ? (q - 1) / 2 : q / 2;
    CHECK(static_cast<long>(ch.enumerate_M().size()) == m);
    CHECK(static_cast<long>(ch.enumerate_N().size()) == n);
    long primitive = 0;
    for (const auto& nu : ch.all_chars(true)) primitive += ch.is_primitive(nu);
    CHECK(primitive == q * q - q);
  }
}

TEST_CASE("restriction and norm composition") {
  const auto ch = groups(7);
  for (const auto& mu : ch.all_chars(false)) {
    const MulChar lifted = ch.compose_norm(mu);
    CHECK_FALSE(ch.is_primitive(lifted));
    CHECK(ch.restrict_to_base(lifted) == ch.power(mu, 2));
  }
}

TEST_CASE("character-sum identities hold pointwise") {
  for (long q : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25}) {
    for (const auto& c : check_character_sum_identities(groups(q))) {
      INFO("q = " << q << ", " << c.name);
      CHECK(c.cases > 0);
      CHECK(c.ok());
    }
  }
}
