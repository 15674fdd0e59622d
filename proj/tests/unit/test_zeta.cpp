#include <doctest.h>

#include "mz/errors.hpp"
#include "mz/zeta.hpp"

using namespace mz;

namespace {
auto table(GroupKind k, long q) { return CharacterTable::build(Group::build(k, q)); }
}  // namespace

TEST_CASE("frozen zeta values of classical groups") {
  CHECK(zeta(*table(GroupKind::GL2, 2), 1) == Rational(5, 2));      // S3
  CHECK(zeta(*table(GroupKind::PGL2, 3), 1) == Rational(19, 6));    // S4
  CHECK(zeta(*table(GroupKind::PGL2, 4), 1) == Rational(127, 60));  // A5
  CHECK(zeta(*table(GroupKind::PGL2, 5), 2) == Rational(1) + Rational(1) + Rational(2, 16) + Rational(2, 25) +
                                                   Rational(1, 36));  // S5
  CHECK(zeta_double(*table(GroupKind::GL2, 2), 0) == Rational(8));
}

TEST_CASE("closed forms equal the table sums") {
  for (long q : {2, 3, 4, 5, 7, 8, 9}) {
    for (auto kind : {GroupKind::GL2, GroupKind::PGL2}) {
      const auto t = table(kind, q);
      for (long s = -4; s <= 6; ++s) CHECK(zeta_closed(kind, static_cast<int>(q), s) == zeta(*t, s));
      CHECK(zeta(*t, 0) == Rational(t->group().num_classes()));
      CHECK(zeta(*t, -2) == Rational(t->group().order()));
      const Complex s(0.5, 1.25);
      CHECK(std::abs(zeta_closed(kind, static_cast<int>(q), s) - zeta(*t, s)) < 1e-9);
      for (int ind : {1, 0, -1}) {
        CHECK(zeta_fs_closed(kind, static_cast<int>(q), ind, 3L) == zeta_fs(*t, ind, 3L));
      }
      CHECK(zeta_fs(*t, 1, 2L) + zeta_fs(*t, 0, 2L) == zeta(*t, 2L));
      if (kind == GroupKind::GL2) {
        for (long s = -2; s <= 4; ++s) CHECK(zeta_double_closed(static_cast<int>(q), s) == zeta_double(*t, s));
      }
    }
  }
}

TEST_CASE("single insertions") {
  for (long q : {2, 3, 4, 5, 7}) {
    for (auto kind : {GroupKind::GL2, GroupKind::PGL2}) {
      const auto t = table(kind, q);
      const Group& g = t->group();
      for (int c = 0; c < g.num_classes(); ++c) {
        REQUIRE(has_insert_closed_form(g, {c}));
        for (long s = -1; s <= 3; ++s) CHECK(zeta_insert_closed(g, {c}, s) == zeta_insert(*t, {c}, s));
      }
    }
  }
}

TEST_CASE("insertion with det of the product different from 1 vanishes") {
  const auto t = table(GroupKind::GL2, 5);
  const Group& g = t->group();
  const int c = parse_class_spec(g, "c3:0,1");
  for (long s = -2; s <= 3; ++s) CHECK(zeta_insert(*t, {c}, s).is_zero());
  const int d = parse_class_spec(g, "c2:1");
  CHECK(zeta_insert(*t, {c, d}, 2L).is_zero());
}

TEST_CASE("insertions without a closed form are rejected") {
  const auto g = Group::build(GroupKind::PGL2, 5);
  const int u = parse_class_spec(*g, "c2:0");
  const int e = parse_class_spec(*g, "c4:1");
  CHECK_FALSE(has_insert_closed_form(*g, {u, e}));
  CHECK_THROWS_AS(zeta_insert_closed(*g, {u, e}, 2L), UsageError);
}
