#include <doctest.h>

#include "mz/errors.hpp"
#include "mz/grp.hpp"

using namespace mz;

TEST_CASE("group orders and class counts") {
  for (long q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto gl = Group::build(GroupKind::GL2, q);
    const auto pgl = Group::build(GroupKind::PGL2, q);
    CHECK(gl->order() == (q * q - 1) * (q * q - q));
    CHECK(pgl->order() == q * (q * q - 1));
    CHECK(gl->num_classes() == q * q - 1);
    CHECK(pgl->num_classes() == (q % 2 ? q + 2 : q + 1));
    for (const auto& g : {gl, pgl}) {
      long total = 0;
      for (const auto& c : g->classes()) {
        total += c.size;
        CHECK(c.size * c.centralizer_order == g->order());
      }
      CHECK(total == g->order());
    }
  }
  CHECK(Group::build(GroupKind::GL2, 4)->order() == 180);
}

TEST_CASE("class labels parse back to their class") {
  for (long q : {2, 3, 4, 5, 9}) {
    for (auto kind : {GroupKind::GL2, GroupKind::PGL2}) {
      const auto g = Group::build(kind, q);
      for (int c = 0; c < g->num_classes(); ++c) {
        CHECK(parse_class_spec(*g, g->class_info(c).label) == c);
        CHECK(g->classify(g->class_info(c).rep) == c);
      }
    }
  }
}

TEST_CASE("class spec grammar") {
  const auto g = Group::build(GroupKind::GL2, 5);
  CHECK(parse_class_spec(*g, "c3:2,1") == parse_class_spec(*g, "c3:1,2"));
  CHECK_THROWS_AS(parse_class_spec(*g, "c3:1,1"), UsageError);
  CHECK_THROWS_AS(parse_class_spec(*g, "c4:0"), UsageError);  // lies in F
  CHECK_THROWS_AS(parse_class_spec(*g, "c5:1"), UsageError);
  CHECK_THROWS_AS(parse_class_spec(*g, "c1:"), UsageError);
  CHECK_THROWS_AS(parse_class_spec(*g, "c2:x"), UsageError);
  // An elliptic label and its Frobenius conjugate name the same class.
  CHECK(parse_class_spec(*g, "c4:1") == parse_class_spec(*g, "c4:5"));
  const auto pgl = Group::build(GroupKind::PGL2, 5);
  CHECK(parse_class_spec(*pgl, "c1:3") == pgl->identity_class());
}

TEST_CASE("element enumeration agrees with the class data") {
  for (long q : {2, 3, 4, 5}) {
    for (auto kind : {GroupKind::GL2, GroupKind::PGL2}) {
      const auto g = Group::build(kind, q);
      const GroupElements el(g);
      REQUIRE(el.size() == g->order());
      std::vector<long> counts(static_cast<std::size_t>(g->num_classes()), 0);
      for (long i = 0; i < el.size(); ++i) {
        ++counts[static_cast<std::size_t>(el.class_of(i))];
        CHECK(el.mul(i, el.inv(i)) == el.identity());
        CHECK(el.class_of(el.mul(i, i)) == g->square_class(el.class_of(i)));
        CHECK(el.class_of(el.inv(i)) == g->inverse_class(el.class_of(i)));
      }
      for (int c = 0; c < g->num_classes(); ++c) CHECK(counts[static_cast<std::size_t>(c)] == g->class_info(c).size);
    }
  }
}

TEST_CASE("enumeration caps are enforced") {
  EnumCaps caps;
  caps.max_group_order = 100;
  CHECK_THROWS_AS(GroupElements(Group::build(GroupKind::GL2, 4), caps), CapExceeded);
}
