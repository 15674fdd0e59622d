#include <doctest.h>

#include "mz/errors.hpp"
#include "mz/ffield.hpp"

using namespace mz;

TEST_CASE("prime power factorisation") {
  CHECK(factor_prime_power(9)->p == 3);
  CHECK(factor_prime_power(9)->e == 2);
  CHECK(factor_prime_power(64)->e == 6);
  CHECK_FALSE(factor_prime_power(6));
  CHECK_FALSE(factor_prime_power(1));
  CHECK_THROWS_AS(FiniteField::build_q(12), UsageError);
}

TEST_CASE("field tables are consistent") {
  for (long q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const auto F = FiniteField::build_q(q);
    CHECK(F->q() == q);
    for (long k = 0; k < q - 1; ++k) CHECK(F->dlog(F->exp(k)) == k);
    CHECK(F->order(F->primitive_root()) == q - 1);
    for (std::uint32_t a = 1; a < static_cast<std::uint32_t>(q); ++a) {
      CHECK(F->mul(FieldElement{a}, F->inv(FieldElement{a})) == F->one());
    }
  }
}

TEST_CASE("frozen canonical choices") {
  // Smallest primitive roots and the first irreducible modulus.
  CHECK(FiniteField::build_q(4)->modulus() == std::vector<int>{1, 1, 1});
  CHECK(FiniteField::build_q(5)->dlog(FiniteField::build_q(5)->from_int(2)) == 1);
  CHECK(FiniteField::build_q(7)->dlog(FiniteField::build_q(7)->from_int(3)) == 1);
  CHECK(FiniteField::build_q(9)->modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("quadratic extension") {
  for (long q : {2, 3, 4, 5, 8, 9}) {
    const auto E = QuadraticExtension::build(FiniteField::build_q(q));
    const auto& F = E->base();
    CHECK(E->order() == q * q);
    // The Frobenius fixes exactly F, and norms of a primitive root generate F^x.
    long fixed = 0;
    for (long k = 0; k < E->order() - 1; ++k) {
      const ExtElement x = E->exp(k);
      CHECK(E->dlog(x) == k);
      if (E->frobenius(x) == x) ++fixed;
    }
    CHECK(fixed == q - 1);
    CHECK(F.order(E->norm(E->primitive_root())) == q - 1);
    CHECK(F.dlog(E->norm(E->primitive_root())) == E->norm_log());
    // t^2 = Delta or t + Omega, with the polynomial irreducible.
    const ExtElement t = E->generator_t();
    const ExtElement rhs = E->odd() ? E->embed(E->nonresidue()) : E->add(t, E->embed(E->nonresidue()));
    CHECK(E->mul(t, t) == rhs);
    CHECK_FALSE(E->is_in_base_field(t));
  }
}
