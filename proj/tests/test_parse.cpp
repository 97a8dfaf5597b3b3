#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordforge/parser.hpp"

using namespace ordforge;

TEST_CASE("printed terms parse back to the same tree") {
  for (const std::string text : {
           "0",
           "w^0",
           "w^0 + w^0",
           "w^(w^0 + w^0)",
           "2^@a + 2^@b",
           "e[@u]",
           "w^(e[@u] + w^0)",
           "phi[@u](w^0)",
           "G[@u]",
           "th(th(0))",
           "Om",
           "E[@x]",
           "E{id.1.0}(th(0))",
           "E{c}(th(0),th(Om))",
           "Om_2",
           "OmW",
           "OmW*@u",
           "th_3(Om_2)",
           "el[@x]",
           "c_2",
           "den{exp2.2.0}(@a,@b)",
       }) {
    CAPTURE(text);
    TermPtr t = parse_term(text);
    CHECK(print_term(t) == text);
  }
}

TEST_CASE("parse errors carry 1-based columns") {
  try {
    parse_term("th(");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("w^"), ParseError);
  CHECK_THROWS_AS(parse_term("e[u]"), ParseError);
  CHECK_THROWS_AS(parse_term("th(0) extra"), ParseError);
}

TEST_CASE("sums flatten left to right") {
  TermPtr t = parse_term("w^0 + w^0 + w^0");
  CHECK(t->head == Head::Sum);
  CHECK(t->args.size() == 3);
}

TEST_CASE("levels and shape indices are read correctly") {
  TermPtr t = parse_term("th_12(0)");
  CHECK(t->head == Head::ThetaN);
  CHECK(t->level == 12);
  TermPtr e = parse_term("E{exp2.2.0}(th(0),th(Om))");
  CHECK(e->head == Head::EpsD);
  CHECK(e->label == "exp2.2.0");
  CHECK(e->args.size() == 2);
}
