#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordforge/epsilon.hpp"
#include "ordforge/parser.hpp"

using namespace ordforge;

namespace {

// Independent oracle for ordinals below eps_0: an ordinal is the list of
// its CNF exponents (largest first), compared lexicographically with the
// proper-prefix-smaller rule. Deliberately shares no code with the
// library comparator.
struct Cnf {
  std::vector<Cnf> exps;
};

int cnf_cmp(const Cnf& a, const Cnf& b) {
  size_t n = std::min(a.exps.size(), b.exps.size());
  for (size_t i = 0; i < n; ++i)
    if (int r = cnf_cmp(a.exps[i], b.exps[i])) return r;
  if (a.exps.size() != b.exps.size())
    return a.exps.size() < b.exps.size() ? -1 : 1;
  return 0;
}

Cnf to_cnf(const TermPtr& t) {
  Cnf out;
  if (is_zero(t)) return out;
  for (const auto& p : summands(t)) {
    REQUIRE(p->head == Head::Power);
    out.exps.push_back(to_cnf(p->args[0]));
  }
  return out;
}

}  // namespace

TEST_CASE("validation enforces the normal form clauses") {
  BaseOrder x = BaseOrder::explicit_order({"u"});
  CHECK_NOTHROW(validate_eps(x, parse_term("e[@u]")));
  CHECK_NOTHROW(validate_eps(x, parse_term("e[@u] + w^0")));
  CHECK_THROWS_AS(validate_eps(x, parse_term("w^e[@u]")), ValidationError);
  CHECK_THROWS_AS(validate_eps(x, parse_term("w^0 + w^w^0")), ValidationError);
  CHECK_THROWS_AS(validate_eps(x, parse_term("e[@v]")), ValidationError);
}

TEST_CASE("comparison agrees with the CNF oracle over the empty base") {
  BaseOrder x = BaseOrder::finite(0);
  auto ts = enumerate_eps(x, 6);
  CHECK(ts.size() > 50);
  for (const auto& a : ts)
    for (const auto& b : ts) {
      int r = cnf_cmp(to_cnf(a), to_cnf(b));
      Ord expected = r < 0 ? Ord::Less : r > 0 ? Ord::Greater : Ord::Equal;
      CAPTURE(print_term(a));
      CAPTURE(print_term(b));
      CHECK(compare_eps(x, a, b) == expected);
    }
}

TEST_CASE("eps atoms sit at their fixed-point position") {
  BaseOrder x = BaseOrder::explicit_order({"u", "v"});
  auto lt = [&](const std::string& a, const std::string& b) {
    return compare_eps(x, parse_term(a), parse_term(b)) == Ord::Less;
  };
  CHECK(lt("w^w^w^0", "e[@u]"));
  CHECK(lt("e[@u]", "w^(e[@u] + w^0)"));
  CHECK(lt("e[@u]", "e[@v]"));
  CHECK(lt("e[@u] + w^0", "w^(e[@u] + w^0)"));
  CHECK(compare_eps(x, parse_term("e[@u]"), parse_term("e[@u]")) == Ord::Equal);
}

TEST_CASE("normalization collapses the eps identification") {
  BaseOrder x = BaseOrder::explicit_order({"u"});
  CHECK(print_term(normalize_eps_term(x, parse_term("w^e[@u]"))) == "e[@u]");
  CHECK(print_term(normalize_eps_term(x, parse_term("w^0 + w^w^0"))) ==
        "w^w^0 + w^0");
  CHECK(print_term(normalize_eps(x, {parse_term("0"), parse_term("w^0")})) ==
        "w^w^0 + w^0");
}

TEST_CASE("the morphism action relabels eps atoms") {
  BaseOrder a = BaseOrder::explicit_order({"u"});
  BaseOrder b = BaseOrder::explicit_order({"p", "q"});
  OrderMorphism f{a, b, {{"u", "q"}}};
  CHECK(print_term(eps_map(f, parse_term("w^(e[@u] + w^0) + e[@u]"))) ==
        "w^(e[@q] + w^0) + e[@q]");
}

TEST_CASE("enumeration is strictly ascending and duplicate-free") {
  BaseOrder x = BaseOrder::explicit_order({"u"});
  auto ts = enumerate_eps(x, 4);
  for (size_t i = 1; i < ts.size(); ++i)
    CHECK(compare_eps(x, ts[i - 1], ts[i]) == Ord::Less);
  for (const auto& t : ts) CHECK_NOTHROW(validate_eps(x, t));
}
