#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordforge/searchtree.hpp"

using namespace ordforge;

namespace {

Sequent seq(std::initializer_list<const char*> texts) {
  Sequent g;
  for (const char* t : texts) g.push_back(parse_formula(t));
  return g;
}

}  // namespace

TEST_CASE("numeric terms evaluate and print") {
  NumTermPtr t = num_times(num_succ(num_lit(2)), num_plus(num_lit(1), num_lit(4)));
  CHECK(num_eval(t) == 15);
  CHECK(num_closed(t));
  CHECK_FALSE(num_closed(num_succ(num_var("x"))));
  CHECK_THROWS_AS(num_eval(num_var("x")), ValidationError);
}

TEST_CASE("formulas round-trip through the parser") {
  for (const std::string text : {
           "eq(0,1)",
           "neq(S(0),plus(1,2))",
           "in(times(2,3),U4)",
           "nin(0,U0)",
           "and(eq(0,0),or(eq(0,1),neq(1,2)))",
           "ex x.eq(x,S(x))",
           "all x.or(in(x,U0),nin(x,U0))",
           "exS X.in(0,X)",
           "allS X.ex y.in(y,X)",
       }) {
    CAPTURE(text);
    CHECK(print_formula(parse_formula(text)) == text);
  }
  CHECK_THROWS_AS(parse_formula("eq(0)"), ParseError);
  CHECK_THROWS_AS(parse_formula("foo(0,0)"), ParseError);
}

TEST_CASE("negation is the NNF dual") {
  CHECK(print_formula(negate(parse_formula("and(eq(0,0),in(0,U1))"))) ==
        "or(neq(0,0),nin(0,U1))");
  CHECK(print_formula(negate(parse_formula("all x.ex y.eq(x,y)"))) ==
        "ex x.all y.neq(x,y)");
  CHECK(print_formula(negate(parse_formula("exS X.in(0,X)"))) ==
        "allS X.nin(0,X)");
}

TEST_CASE("substitution respects shadowing") {
  FormulaPtr f = parse_formula("and(eq(x,0),ex x.eq(x,1))");
  CHECK(print_formula(subst_num(f, "x", 7)) == "and(eq(7,0),ex x.eq(x,1))");
  FormulaPtr g = parse_formula("and(in(0,X),exS X.in(1,X))");
  CHECK(print_formula(subst_set(g, "X", 2)) == "and(in(0,U2),exS X.in(1,X))");
}

TEST_CASE("axiomatic sequents") {
  CHECK(is_axiomatic(seq({"eq(0,0)"})));
  CHECK(is_axiomatic(seq({"eq(0,1)", "neq(0,1)"})));
  CHECK(is_axiomatic(seq({"in(S(0),U3)", "nin(1,U3)"})));
  CHECK_FALSE(is_axiomatic(seq({"eq(0,1)", "in(0,U1)"})));
  CHECK_FALSE(is_axiomatic(seq({"in(0,U1)", "nin(0,U2)"})));
  CHECK_FALSE(is_axiomatic(seq({})));
  CHECK_THROWS_AS(is_axiomatic(seq({"eq(x,0)"})), ValidationError);
}

TEST_CASE("the disjunction rule splices both disjuncts in place") {
  FormulaPtr C = parse_formula("in(0,X)");
  std::vector<Sequent> chain{seq({"neq(0,0)", "or(eq(0,1),eq(1,1))", "eq(0,2)"})};
  Expansion e = expand(chain, 0, C, 4);
  REQUIRE(e.children.size() == 1);
  CHECK(print_sequent(e.children[0]) ==
        "[neq(0,0), eq(0,1), eq(1,1), eq(0,2), nin(0,U0)]");
  CHECK_FALSE(e.truncated);
}

TEST_CASE("the conjunction rule branches") {
  FormulaPtr C = parse_formula("in(0,X)");
  std::vector<Sequent> chain{seq({"and(eq(0,1),eq(1,2))"})};
  Expansion e = expand(chain, 0, C, 4);
  REQUIRE(e.children.size() == 2);
  CHECK(print_sequent(e.children[0]) == "[eq(0,1), nin(0,U0)]");
  CHECK(print_sequent(e.children[1]) == "[eq(1,2), nin(0,U0)]");
}

TEST_CASE("the existential rule picks the first fresh numeral and retains") {
  FormulaPtr C = parse_formula("in(0,X)");
  std::vector<Sequent> chain{seq({"eq(0,1)", "ex x.eq(x,1)"}),
                             seq({"eq(0,1)", "ex x.eq(x,1)", "nin(0,U0)"})};
  Expansion e = expand(chain, 1, C, 4);
  REQUIRE(e.children.size() == 1);
  // eq(0,1) already occurs on the chain, so the witness is 1
  CHECK(print_sequent(e.children[0]) ==
        "[eq(0,1), eq(1,1), nin(0,U0), nin(0,U1), ex x.eq(x,1)]");
}

TEST_CASE("the universal number rule fans out up to the bound") {
  FormulaPtr C = parse_formula("in(0,X)");
  std::vector<Sequent> chain{seq({"all x.eq(x,0)"})};
  Expansion e = expand(chain, 0, C, 3);
  REQUIRE(e.children.size() == 3);
  CHECK(e.truncated);
  CHECK(print_sequent(e.children[2]) == "[eq(2,0), nin(0,U0)]");
}

TEST_CASE("the set quantifier rules") {
  FormulaPtr C = parse_formula("in(0,X)");
  std::vector<Sequent> chain{seq({"exS X.in(0,X)"})};
  Expansion e = expand(chain, 0, C, 4);
  REQUIRE(e.children.size() == 1);
  CHECK(print_sequent(e.children[0]) ==
        "[in(0,U0), nin(0,U0), exS X.in(0,X)]");

  // allS skips i+1 and every index already in the sequent
  std::vector<Sequent> chain2{seq({"in(0,U0)", "allS X.in(0,X)"})};
  Expansion e2 = expand(chain2, 0, C, 4);
  REQUIRE(e2.children.size() == 1);
  CHECK(print_sequent(e2.children[0]) == "[in(0,U0), in(0,U2), nin(0,U0)]");
}

TEST_CASE("non-reducible sequents only collect the negated axiom") {
  FormulaPtr C = parse_formula("in(0,X)");
  std::vector<Sequent> chain{seq({"eq(0,1)"})};
  Expansion e = expand(chain, 0, C, 4);
  REQUIRE(e.children.size() == 1);
  CHECK(print_sequent(e.children[0]) == "[eq(0,1), nin(0,U0)]");
  CHECK_THROWS_AS(expand({seq({"eq(0,0)"})}, 0, C, 4), ValidationError);
}

TEST_CASE("a propositionally provable goal closes every leaf") {
  ChainTree tree = build_tree(seq({"or(neq(0,0),eq(0,0))"}),
                              parse_formula("in(0,X)"), 8, 4);
  CHECK(tree.status == TreeStatus::AllLeavesAxiomatic);
  CHECK_FALSE(tree.truncated);
  auto chain = tree.chain_of({0});
  REQUIRE(chain.size() == 2);
  CHECK(print_sequent(chain[1]) == "[neq(0,0), eq(0,0), nin(0,U0)]");
  CHECK(tree.to_json().find("all-leaves-axiomatic") != std::string::npos);
}

TEST_CASE("a stalled branch is reported as an open path") {
  // With a set-free axiom the appended negation stabilizes and the
  // sequent repeats verbatim.
  ChainTree tree =
      build_tree(seq({"eq(0,1)"}), parse_formula("eq(0,0)"), 10, 4);
  CHECK(tree.status == TreeStatus::OpenPathFound);
  auto path = tree.chain_of(tree.open_path_tip);
  CHECK(sequent_eq(path[path.size() - 1], path[path.size() - 2]));
}

TEST_CASE("an unprovable goal with growing sequents exhausts the depth") {
  ChainTree tree =
      build_tree(seq({"eq(0,1)"}), parse_formula("in(0,X)"), 4, 4);
  CHECK(tree.status == TreeStatus::DepthExhausted);
}

TEST_CASE("the tree linearizes under the Kleene-Brouwer order") {
  ChainTree tree = build_tree(
      seq({"and(or(neq(0,0),eq(0,0)),and(eq(1,1),eq(2,2)))"}),
      parse_formula("in(0,X)"), 10, 4);
  CHECK(tree.status == TreeStatus::AllLeavesAxiomatic);
  auto sorted = kb_sort(tree.shape);
  REQUIRE(sorted.size() == tree.shape.size());
  for (size_t i = 1; i < sorted.size(); ++i)
    CHECK(kb_compare(tree.shape, sorted[i - 1], sorted[i]) == Ord::Less);
  CHECK(sorted.back().empty());  // root is the KB-maximum
}

TEST_CASE("the path model collects the excluded numerals") {
  std::vector<Sequent> path{
      seq({"nin(3,U0)"}),
      seq({"nin(3,U0)", "nin(2,U0)", "in(5,U1)"}),
  };
  auto model = extract_path_model(path);
  REQUIRE(model.size() == 2);
  CHECK(model[0] == std::vector<long>{3, 2});
  CHECK(model[1].empty());
  CHECK_THROWS_AS(extract_path_model({seq({"eq(0,0)"})}), ValidationError);
}
