#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "mz/classfn.hpp"
#include "mz/errors.hpp"
#include "mz/oracle.hpp"
#include "mz/topo.hpp"
#include "mz/zeta.hpp"

using namespace mz;

namespace {
constexpr std::uint64_t kSeed = 0x6d7a2d70726f70ULL;
auto table(GroupKind k, long q) { return CharacterTable::build(Group::build(k, q)); }
}  // namespace

TEST_CASE("rational field axioms") {
  Gen gen(kSeed);
  for (int it = 0; it < 2000; ++it) {
    const Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
    INFO("iteration " << it << ": " << a << ", " << b << ", " << c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::from_string(a.to_string()) == a);
    CHECK((a < b) != (b <= a));
  }
}

TEST_CASE("cyclotomic ring axioms") {
  Gen gen(kSeed + 1);
  for (int it = 0; it < 300; ++it) {
    const int n = static_cast<int>(gen.pick(std::vector<long>{3, 8, 15, 24, 48, 80}));
    const CycNumber a = gen.cyc(n), b = gen.cyc(n), c = gen.cyc(n);
    INFO("iteration " << it << ", n = " << n);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
    CHECK((a * b).lift(2 * n) == a.lift(2 * n) * b.lift(2 * n));
    CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) <
          1e-6 * (1 + std::abs(a.to_complex() * b.to_complex())));
  }
}

TEST_CASE("finite field axioms") {
  Gen gen(kSeed + 2);
  for (long q : {4, 8, 9, 25, 27}) {
    const auto E = QuadraticExtension::build(FiniteField::build_q(q));
    const auto& F = E->base();
    for (int it = 0; it < 300; ++it) {
      const FieldElement x{static_cast<std::uint32_t>(gen.range(0, q - 1))};
      const FieldElement y{static_cast<std::uint32_t>(gen.range(0, q - 1))};
      const FieldElement z{static_cast<std::uint32_t>(gen.range(0, q - 1))};
      CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
      CHECK(F.sub(F.add(x, y), y) == x);
      const ExtElement u{static_cast<std::uint32_t>(gen.range(1, q * q - 1))};
      const ExtElement v{static_cast<std::uint32_t>(gen.range(1, q * q - 1))};
      CHECK(E->norm(E->mul(u, v)) == F.mul(E->norm(u), E->norm(v)));
      CHECK(E->frobenius(E->mul(u, v)) == E->mul(E->frobenius(u), E->frobenius(v)));
      CHECK(E->frobenius(E->frobenius(u)) == u);
      CHECK(E->mul(u, E->inv(u)) == E->one());
      CHECK(E->trace(u) == E->a(E->add(u, E->frobenius(u))));
    }
  }
}

TEST_CASE("convolution is diagonalized by characters") {
  Gen gen(kSeed + 3);
  for (long q : {2, 3, 4}) {
    const auto t = table(GroupKind::GL2, q);
    const auto& g = t->group_ptr();
    const Oracle oracle(g);
    for (int it = 0; it < 20; ++it) {
      std::vector<Rational> fv, hv;
      for (int c = 0; c < g->num_classes(); ++c) {
        fv.push_back(Rational(gen.range(-5, 5)));
        hv.push_back(Rational(gen.range(-5, 5)));
      }
      const auto f = ClassFunction::from_rationals(g, t->conductor(), fv);
      const auto h = ClassFunction::from_rationals(g, t->conductor(), hv);
      CHECK(ClassFunction::from_fourier(*t, f.fourier(*t)) == f);
      // Spectral convolution is the element sum divided by |G|.
      CHECK(f.convolve(*t, h) * Rational(g->order()) == oracle.convolve(f, h));
      CHECK(f.convolve(*t, h) == h.convolve(*t, f));
    }
  }
}

TEST_CASE("random surfaces: formula equals enumeration") {
  Gen gen(kSeed + 4);
  for (long q : {2, 3}) {
    for (auto kind : {GroupKind::GL2, GroupKind::PGL2}) {
      const auto t = table(kind, q);
      const Oracle oracle(t->group_ptr());
      for (int it = 0; it < 40; ++it) {
        const bool orientable = gen.coin();
        const SurfaceSpec spec{orientable, gen.range(orientable ? 0 : 1, 3), gen.classes(t->group(), 0, 3)};
        INFO(t->group().name() << " iteration " << it << " genus " << spec.genus << " orientable " << orientable);
        const Rational formula = hom_count(*t, spec).value;
        CHECK(formula == oracle.hom_count(spec));
        CHECK(formula.is_integer());
        CHECK(formula.sign() >= 0);
        if (kind == GroupKind::GL2) CHECK(quotient_count(*t, spec).value == oracle.quotient_count_burnside(spec));
      }
    }
  }
}

TEST_CASE("random insertion lists: closed forms equal table sums") {
  Gen gen(kSeed + 5);
  for (long q : {2, 3, 4, 5, 7, 8, 9}) {
    for (auto kind : {GroupKind::GL2, GroupKind::PGL2}) {
      const auto t = table(kind, q);
      const Group& g = t->group();
      for (int it = 0; it < 25; ++it) {
        const auto cls = gen.classes(g, 1, 4);
        const long s = gen.range(-3, 5);
        INFO(g.name() << " iteration " << it << " s " << s);
        const Rational generic = zeta_insert(*t, cls, s);
        if (has_insert_closed_form(g, cls)) {
          CHECK(zeta_insert_closed(g, cls, s) == generic);
        } else {
          CHECK_THROWS_AS(zeta_insert_closed(g, cls, s), UsageError);
        }
        // Reordering the insertions does not change the value.
        auto rev = cls;
        std::reverse(rev.begin(), rev.end());
        CHECK(zeta_insert(*t, rev, s) == generic);
      }
    }
  }
}

TEST_CASE("random complex arguments") {
  Gen gen(kSeed + 6);
  for (int it = 0; it < 50; ++it) {
    const long q = gen.pick(std::vector<long>{2, 3, 4, 5, 7, 8, 9});
    const auto kind = gen.coin() ? GroupKind::GL2 : GroupKind::PGL2;
    const Complex s(static_cast<double>(gen.range(-300, 600)) / 100.0, static_cast<double>(gen.range(-500, 500)) / 100.0);
    const auto t = table(kind, q);
    CHECK(std::abs(zeta_closed(kind, static_cast<int>(q), s) - zeta(*t, s)) < 1e-9 * (1 + std::abs(zeta(*t, s))));
    if (kind == GroupKind::GL2) {
      CHECK(std::abs(zeta_double_closed(static_cast<int>(q), s) - zeta_double(*t, s)) <
            1e-9 * (1 + std::abs(zeta_double(*t, s))));
    }
  }
}

TEST_CASE("fusion coefficients are symmetric non-negative integers") {
  Gen gen(kSeed + 7);
  for (long q : {5, 7, 8, 9}) {
    const auto t = table(GroupKind::GL2, q);
    const int n = t->num_irreps();
    for (int it = 0; it < 200; ++it) {
      const int i = static_cast<int>(gen.range(0, n - 1)), j = static_cast<int>(gen.range(0, n - 1)),
                k = static_cast<int>(gen.range(0, n - 1));
      const long m = t->fusion_coeff(i, j, k);
      CHECK(m >= 0);
      CHECK(m == t->fusion_coeff(j, i, k));
      // Frobenius reciprocity: <i x j, k> = <i, k x j*>.
      CHECK(m == t->fusion_coeff(k, t->contragredient_index(j), i));
      CHECK(t->triple_bracket(i, j, k) ==
            closed_form_bracket(t->chars(), t->irrep(i), t->irrep(j), t->irrep(k)));
    }
  }
}
