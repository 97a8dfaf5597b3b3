#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordforge/base_order.hpp"
#include "ordforge/tree.hpp"

using namespace ordforge;

TEST_CASE("finite orders compare by position") {
  BaseOrder x = BaseOrder::finite(3);
  CHECK(x.size() == 3);
  CHECK(x.compare("0", "2") == Ord::Less);
  CHECK(x.compare("2", "2") == Ord::Equal);
  CHECK(x.compare("2", "1") == Ord::Greater);
  CHECK(x.elements() == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("explicit orders compare by list position, not label text") {
  BaseOrder x = BaseOrder::explicit_order({"b", "a", "c"});
  CHECK(x.compare("b", "a") == Ord::Less);
  CHECK(x.compare("c", "a") == Ord::Greater);
  CHECK_THROWS_AS(BaseOrder::explicit_order({"a", "a"}), ValidationError);
}

TEST_CASE("omega compares numerals by value") {
  BaseOrder w = BaseOrder::omega();
  CHECK(w.compare("2", "10") == Ord::Less);
  CHECK(w.elements(4) == std::vector<std::string>{"0", "1", "2", "3"});
}

TEST_CASE("base order text syntax round-trips") {
  for (const std::string text : {"fin:4", "omega", "list:[a,b,c]"}) {
    CHECK(BaseOrder::parse(text).to_text() == text);
  }
  CHECK_THROWS_AS(BaseOrder::parse("fin:x"), ValidationError);
}

TEST_CASE("morphism application and composition") {
  BaseOrder a = BaseOrder::finite(2), b = BaseOrder::finite(4);
  OrderMorphism f{a, b, {{"0", "1"}, {"1", "3"}}};
  CHECK(f.apply("0") == "1");
  CHECK(check_morphism(f));
  OrderMorphism id = identity_morphism(b);
  OrderMorphism g = compose(id, f);
  CHECK(g.apply("1") == "3");
  OrderMorphism bad{a, b, {{"0", "3"}, {"1", "1"}}};
  CHECK_FALSE(check_morphism(bad));
}

TEST_CASE("morphism json round-trips") {
  BaseOrder a = BaseOrder::finite(2), b = BaseOrder::finite(3);
  OrderMorphism f{a, b, {{"0", "0"}, {"1", "2"}}};
  OrderMorphism g = OrderMorphism::from_json(f.to_json());
  CHECK(g.source == a);
  CHECK(g.target == b);
  CHECK(g.map == f.map);
}

TEST_CASE("pullback realizes the range intersection") {
  BaseOrder c = BaseOrder::finite(4);
  OrderMorphism f{BaseOrder::finite(3), c, {{"0", "0"}, {"1", "1"}, {"2", "3"}}};
  OrderMorphism g{BaseOrder::finite(2), c, {{"0", "1"}, {"1", "3"}}};
  auto [d, h] = pullback(f, g);
  CHECK(d.size() == 2);
  CHECK(h.apply("0") == "1");
  CHECK(h.apply("1") == "3");
}

TEST_CASE("all increasing morphisms are enumerated") {
  CHECK(all_morphisms(2, 4).size() == 6);  // 4 choose 2
  CHECK(all_morphisms(0, 3).size() == 1);
  CHECK(all_morphisms(4, 3).empty());
}

TEST_CASE("kleene-brouwer order") {
  FiniteTree t;
  t.insert({0, 0});
  t.insert({0, 1});
  t.insert({1});
  CHECK(t.contains({0}));
  CHECK(t.size() == 5);

  // extensions precede prefixes, siblings by first difference
  CHECK(kb_compare(t, {0, 0}, {0}) == Ord::Less);
  CHECK(kb_compare(t, {0, 0}, {0, 1}) == Ord::Less);
  CHECK(kb_compare(t, {0, 1}, {1}) == Ord::Less);
  CHECK(kb_compare(t, {}, {1}) == Ord::Greater);

  auto sorted = kb_sort(t);
  CHECK(sorted.back() == TreeNode{});  // root is the maximum
  for (size_t i = 1; i < sorted.size(); ++i)
    CHECK(kb_compare(t, sorted[i - 1], sorted[i]) == Ord::Less);
}
