#include <doctest.h>

#include "mz/errors.hpp"
#include "mz/oracle.hpp"
#include "mz/topo.hpp"

using namespace mz;

namespace {
auto group(GroupKind k, long q) { return Group::build(k, q); }
}  // namespace

TEST_CASE("enumerated theta functions equal their spectral expansions") {
  for (long q : {2, 3, 4}) {
    for (auto kind : {GroupKind::GL2, GroupKind::PGL2}) {
      const auto g = group(kind, q);
      const auto t = CharacterTable::build(g);
      const Oracle o(g);
      CHECK(o.theta_torus() == ClassFunction::theta_torus_spectral(*t));
      CHECK(o.theta_square() == ClassFunction::theta_square_spectral(*t));
    }
  }
}

TEST_CASE("structure constants") {
  const auto g = group(GroupKind::GL2, 3);
  const Oracle o(g);
  for (int k = 0; k < g->num_classes(); ++k) {
    long total = 0;
    for (int i = 0; i < g->num_classes(); ++i) {
      for (int j = 0; j < g->num_classes(); ++j) total += o.structure_constant(i, j, k);
    }
    CHECK(total == g->order());
  }
}

TEST_CASE("convolution path equals direct enumeration") {
  const auto g = group(GroupKind::GL2, 2);
  const Oracle o(g);
  for (long genus = 0; genus <= 2; ++genus) {
    const SurfaceSpec orientable{true, genus, {}};
    CHECK(o.hom_count(orientable) == o.direct_hom_count(orientable));
  }
  for (long genus = 1; genus <= 3; ++genus) {
    const SurfaceSpec s{false, genus, {}};
    CHECK(o.hom_count(s) == o.direct_hom_count(s));
  }
  for (int c = 0; c < g->num_classes(); ++c) {
    const SurfaceSpec s{true, 1, {c, c}};
    CHECK(o.hom_count(s) == o.direct_hom_count(s));
    CHECK(o.quotient_count_burnside(s) == o.quotient_count_orbits(s));
  }
}

TEST_CASE("frozen brute counts") {
  const Oracle s3(group(GroupKind::GL2, 2));
  CHECK(s3.direct_hom_count(SurfaceSpec{true, 1, {}}) == Rational(18));
  CHECK(s3.quotient_count_orbits(SurfaceSpec{true, 1, {}}) == Rational(8));
  const Oracle s4(group(GroupKind::PGL2, 3));
  CHECK(s4.direct_hom_count(SurfaceSpec{false, 1, {}}) == Rational(10));
  CHECK(s4.quotient_count_orbits(SurfaceSpec{true, 1, {}}) == Rational(21));  // sum over classes of k(C(x))
}

TEST_CASE("caps are errors, not downgrades") {
  OracleConfig cfg;
  cfg.caps.max_pairs = 1000;
  const Oracle o(group(GroupKind::GL2, 3), cfg);
  CHECK_THROWS_AS(o.theta_torus(), CapExceeded);
  CHECK_THROWS_AS(o.direct_hom_count(SurfaceSpec{true, 2, {}}), CapExceeded);
}

TEST_CASE("preloaded theta values are validated") {
  const auto g = group(GroupKind::GL2, 2);
  Oracle o(g);
  std::vector<Rational> torus, square;
  for (int c = 0; c < g->num_classes(); ++c) {
    torus.push_back(*o.theta_torus()[c].as_rational());
    square.push_back(*o.theta_square()[c].as_rational());
  }
  Oracle fresh(g);
  fresh.set_theta(torus, square);
  CHECK(fresh.has_theta_torus());
  CHECK(fresh.hom_count(SurfaceSpec{true, 2, {}}) == Rational(486));
  torus[0] += Rational(1);
  Oracle bad(g);
  CHECK_THROWS(bad.set_theta(torus, square));
}

TEST_CASE("parallel enumeration is deterministic") {
  const auto g = group(GroupKind::GL2, 4);
  OracleConfig cfg;
  cfg.jobs = 3;
  CHECK(Oracle(g, cfg).theta_torus() == Oracle(g).theta_torus());
}

TEST_CASE("element sums of characters") {
  const auto g = group(GroupKind::GL2, 3);
  const auto t = CharacterTable::build(g);
  const Oracle o(g);
  for (int i = 0; i < t->num_irreps(); ++i) {
    CHECK(o.fs(*t, i) == Rational(t->fs(i)));
    for (int j = 0; j < t->num_irreps(); ++j) {
      for (int k = 0; k < t->num_irreps(); ++k) {
        CHECK(o.triple(*t, i, j, k) == t->triple_bracket(i, j, k));
        CHECK(o.fusion(*t, i, j, k) == Rational(t->fusion_coeff(i, j, k)));
      }
    }
  }
  for (int c = 0; c < g->num_classes(); ++c) {
    if (g->class_info(c).cls.type == ClassType::Central) continue;
    const AbelianCentralizer h(g, c);
    for (long rho = 0; rho < h.order(); ++rho) {
      for (int gamma = 0; gamma < g->num_classes(); ++gamma) {
        CHECK(o.induced_char_value(h, rho, gamma) == induced_char_value(h, rho, gamma));
      }
    }
  }
}
