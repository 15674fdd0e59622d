#include <doctest.h>

#include <algorithm>

#include "mz/errors.hpp"
#include "mz/reptheory.hpp"

using namespace mz;

namespace {
std::vector<long> sorted_dims(const CharacterTable& t) {
  std::vector<long> d;
  for (int i = 0; i < t.num_irreps(); ++i) d.push_back(t.dim(i));
  std::sort(d.begin(), d.end());
  return d;
}
auto table(GroupKind k, long q) { return CharacterTable::build(Group::build(k, q)); }
}  // namespace

TEST_CASE("small cases match classical groups") {
  using V = std::vector<long>;
  CHECK(sorted_dims(*table(GroupKind::GL2, 2)) == V{1, 1, 2});           // S3
  CHECK(sorted_dims(*table(GroupKind::PGL2, 3)) == V{1, 1, 2, 3, 3});     // S4
  CHECK(sorted_dims(*table(GroupKind::PGL2, 4)) == V{1, 3, 3, 4, 5});     // A5
  CHECK(sorted_dims(*table(GroupKind::PGL2, 5)) == V{1, 1, 4, 4, 5, 5, 6});  // S5
}

TEST_CASE("irrep counts, dimensions and labels") {
  for (long q : {2, 3, 4, 5, 7, 8, 9}) {
    for (auto kind : {GroupKind::GL2, GroupKind::PGL2}) {
      const auto t = table(kind, q);
      CHECK(t->num_irreps() == t->group().num_classes());
      long sum = 0;
      for (int i = 0; i < t->num_irreps(); ++i) {
        sum += t->dim(i) * t->dim(i);
        CHECK(t->value(i, t->group().identity_class()).as_rational() == Rational(t->dim(i)));
        CHECK(t->irrep_index(parse_irrep_label(irrep_label(t->irrep(i)))) == i);
        CHECK(t->contragredient_index(t->contragredient_index(i)) == i);
      }
      CHECK(sum == t->group().order());
    }
  }
}

TEST_CASE("Frobenius-Schur indicators") {
  for (long q : {2, 3, 4, 5, 7, 8, 9}) {
    for (auto kind : {GroupKind::GL2, GroupKind::PGL2}) {
      const auto t = table(kind, q);
      for (int i = 0; i < t->num_irreps(); ++i) {
        CHECK(t->fs_by_sum(i) == Rational(t->fs(i)));
        CHECK(t->fs(i) != -1);
        if (kind == GroupKind::PGL2) CHECK(t->fs(i) == 1);
        CHECK((t->fs(i) != 0) == (t->contragredient_index(i) == i));
      }
    }
  }
}

TEST_CASE("fusion coefficients match the closed brackets") {
  for (long q : {3, 4}) {
    const auto t = table(GroupKind::GL2, q);
    const int n = t->num_irreps();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        long dims = 0;
        for (int k = 0; k < n; ++k) {
          CHECK(t->triple_bracket(i, j, k) ==
                closed_form_bracket(t->chars(), t->irrep(i), t->irrep(j), t->irrep(k)));
          const long m = t->fusion_coeff(i, j, k);
          CHECK(m >= 0);
          dims += m * t->dim(k);
        }
        CHECK(dims == t->dim(i) * t->dim(j));
      }
    }
  }
}

TEST_CASE("label parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_irrep_label("X(1)"), UsageError);
  CHECK_THROWS_AS(parse_irrep_label("I(1)"), UsageError);
  CHECK_THROWS_AS(parse_irrep_label("chi(1"), UsageError);
  CHECK(parse_irrep_label("I(0,1)").type == IrrepType::Principal);
}
