#include <doctest.h>

#include "mz/errors.hpp"
#include "mz/topo.hpp"
#include "mz/zeta.hpp"

using namespace mz;

namespace {
auto table(GroupKind k, long q) { return CharacterTable::build(Group::build(k, q)); }
Rational hom(const CharacterTable& t, bool orientable, long genus, std::vector<int> b = {}) {
  return hom_count(t, SurfaceSpec{orientable, genus, std::move(b)}).value;
}
}  // namespace

TEST_CASE("frozen counts for classical groups") {
  const auto s3 = table(GroupKind::GL2, 2);
  CHECK(hom(*s3, true, 0) == Rational(1));
  CHECK(hom(*s3, true, 1) == Rational(18));  // commuting pairs: |G| k(G)
  CHECK(hom(*s3, true, 2) == Rational(486));
  CHECK(hom(*s3, false, 1) == Rational(4));   // solutions of x^2 = e
  CHECK(hom(*s3, false, 2) == Rational(18));  // Klein bottle: |G| sum nu^2
  CHECK(quotient_count(*s3, SurfaceSpec{true, 1, {}}).value == Rational(8));

  const auto s4 = table(GroupKind::PGL2, 3);
  CHECK(hom(*s4, true, 1) == Rational(120));
  CHECK(hom(*s4, false, 1) == Rational(10));
  const auto a5 = table(GroupKind::PGL2, 4);
  CHECK(hom(*a5, true, 1) == Rational(300));
  CHECK(hom(*a5, false, 1) == Rational(16));
  const auto s5 = table(GroupKind::PGL2, 5);
  CHECK(hom(*s5, true, 1) == Rational(840));
  CHECK(hom(*s5, false, 1) == Rational(26));

  const auto gl3 = table(GroupKind::GL2, 3);
  CHECK(hom(*gl3, true, 1) == Rational(384));
  CHECK(hom(*gl3, true, 2) == Rational(335616));
  CHECK(quotient_count(*gl3, SurfaceSpec{true, 1, {}}).value == Rational(56));
}

TEST_CASE("projective plane counts 1 + t") {
  for (long q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto t = table(GroupKind::GL2, q);
    const long inv = q % 2 == 0 ? q * q - 1 : q * q + q + 1;
    CHECK(hom(*t, false, 1) == Rational(1 + inv));
  }
}

TEST_CASE("closed orientable counts scale the zeta function") {
  for (long q : {2, 3, 4, 5}) {
    const auto t = table(GroupKind::GL2, q);
    const Rational order(t->group().order());
    for (long g = 0; g <= 4; ++g) {
      CHECK(hom(*t, true, g) == order.pow(2 * g - 1) * zeta(*t, 2 * g - 2));
      CHECK(hom_count_per_order(*t, SurfaceSpec{true, g, {}}).value == order.pow(2 * g - 2) * zeta(*t, 2 * g - 2));
      if (g >= 1) {
        CHECK(quotient_count(*t, SurfaceSpec{true, g, {}}).value == order.pow(2 * g - 2) * zeta_double(*t, 2 * g - 2));
      }
    }
  }
}

TEST_CASE("surface validation") {
  const auto t = table(GroupKind::GL2, 3);
  CHECK_THROWS_AS(hom(*t, true, -1), UsageError);
  CHECK_THROWS_AS(hom(*t, false, 0), UsageError);
  CHECK_THROWS_AS(hom(*t, true, 1, {99}), UsageError);
  CHECK_THROWS_AS(quotient_count(*table(GroupKind::PGL2, 3), SurfaceSpec{true, 1, {}}), UsageError);
}

TEST_CASE("centralizer characters") {
  const auto g = Group::build(GroupKind::GL2, 3);
  for (int c = 0; c < g->num_classes(); ++c) {
    if (g->class_info(c).cls.type == ClassType::Central) continue;
    const AbelianCentralizer h(g, c);
    CHECK(h.order() == g->class_info(c).centralizer_order);
    CHECK(h.contains(g->class_info(c).rep));
    // Row orthogonality of the character group of an abelian group.
    for (long a = 0; a < h.order(); ++a) {
      CycNumber acc(h.conductor(), Rational(0));
      for (const auto& x : h.elements()) acc += h.character(a, x) * h.character(0, x).conj();
      CHECK(acc.as_rational() == Rational(a == 0 ? h.order() : 0));
    }
    // The induced character from rho = 1 has degree [G : H].
    CHECK(induced_char_value(h, 0, g->identity_class()).as_rational() == Rational(g->order() / h.order()));
  }
}
