#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordforge/omega_tower.hpp"
#include "ordforge/parser.hpp"

using namespace ordforge;

namespace {

OmContext ctx_x() {
  return OmContext::over_base(BaseOrder::explicit_order({"u", "v"}));
}

Ord cmp(const std::string& a, const std::string& b) {
  return compare_om(ctx_x(), parse_term(a), parse_term(b));
}

std::vector<std::string> supp_strings(int level, const std::string& text) {
  std::vector<std::string> out;
  for (const auto& s : om_supp(ctx_x(), level, parse_term(text)))
    out.push_back(print_term(s));
  return out;
}

}  // namespace

TEST_CASE("level-n support") {
  CHECK(supp_strings(1, "Om_2").empty());
  CHECK(supp_strings(1, "OmW").empty());
  CHECK(supp_strings(1, "th_2(0)") == std::vector<std::string>{"0"});
  CHECK(supp_strings(2, "th_1(Om_1)").empty());
  CHECK(supp_strings(1, "th_1(Om_1)") == std::vector<std::string>{"Om_1"});
  CHECK(supp_strings(1, "th_2(th_1(0) + th_1(0))") ==
        std::vector<std::string>{"0", "th_1(0) + th_1(0)"});
  CHECK(supp_strings(1, "OmW*@u").empty());
  CHECK(supp_strings(1, "w^(Om_2 + th_1(0))") ==
        std::vector<std::string>{"0"});
}

TEST_CASE("the side condition gates term formation") {
  OmContext ctx = ctx_x();
  CHECK_NOTHROW(validate_om(ctx, parse_term("th_1(th_1(0))")));
  CHECK_NOTHROW(validate_om(ctx, parse_term("th_1(Om_1)")));
  CHECK_NOTHROW(validate_om(ctx, parse_term("th_2(th_1(0))")));
  // supp_1(th_1(Om_1)) contains Om_1, which is not below th_1(Om_1)
  CHECK_THROWS_AS(validate_om(ctx, parse_term("th_1(th_1(Om_1))")),
                  ValidationError);
  CHECK_THROWS_AS(validate_om(ctx, parse_term("th_2(0) + th_1(0) + th_2(0)")),
                  ValidationError);
  CHECK_THROWS_AS(validate_om(ctx, parse_term("w^Om_1")), ValidationError);
  CHECK_THROWS_AS(validate_om(ctx, parse_term("OmW*@z")), ValidationError);
}

TEST_CASE("levels separate: the atom ladder is strict") {
  CHECK(cmp("th_1(0)", "th_2(0)") == Ord::Less);
  CHECK(cmp("th_1(0)", "Om_1") == Ord::Less);
  CHECK(cmp("Om_1", "th_2(0)") == Ord::Less);
  CHECK(cmp("Om_1", "Om_2") == Ord::Less);
  CHECK(cmp("Om_2", "th_1(0)") == Ord::Greater);
  CHECK(cmp("Om_3", "OmW") == Ord::Less);
  CHECK(cmp("OmW", "OmW*@u") == Ord::Less);
  CHECK(cmp("OmW*@u", "OmW*@v") == Ord::Less);
  // same level: the arguments decide
  CHECK(cmp("th_1(0)", "th_1(Om_1)") == Ord::Less);
  CHECK(cmp("th_1(Om_2)", "th_1(Om_1)") == Ord::Greater);
  CHECK(cmp("th_2(th_1(0))", "th_2(0)") == Ord::Greater);
  CHECK(cmp("th_1(0)", "th_1(0)") == Ord::Equal);
  // eps-number absorption at every rung
  CHECK(cmp("Om_1", "w^(Om_1 + th_1(0))") == Ord::Less);
  CHECK(cmp("w^(Om_1 + th_1(0))", "Om_2") == Ord::Less);
}

TEST_CASE("the morphism action relabels OmW multiples") {
  BaseOrder a = BaseOrder::explicit_order({"u"});
  BaseOrder b = BaseOrder::explicit_order({"u", "v"});
  OmContext ctx = OmContext::over_base(a);
  OrderMorphism f{a, b, {{"u", "v"}}};
  CHECK(print_term(om_map(ctx, f, parse_term("OmW*@u + th_1(0)"))) ==
        "OmW*@v + th_1(0)");
}

TEST_CASE("denotation atoms sit above OmW") {
  OmContext ctx = OmContext::over_denotations(
      denotations_from_functor(identity_functor(), 1, 4));
  auto c = [&](const std::string& a, const std::string& b) {
    return compare_om(ctx, parse_term(a), parse_term(b));
  };
  CHECK(c("OmW", "E{id.1.0}(th_1(0))") == Ord::Less);
  CHECK(c("E{id.1.0}(th_1(0))", "E{id.1.0}(th_2(0))") == Ord::Less);
  CHECK(c("E{id.1.0}(th_1(0))", "E{id.1.0}(th_1(0))") == Ord::Equal);
}

TEST_CASE("enumeration is ascending, valid and level-bounded") {
  for (OmContext ctx :
       {ctx_x(), OmContext::over_denotations(
                     denotations_from_functor(identity_functor(), 1, 4))}) {
    auto ts = enumerate_om(ctx, 3);
    CHECK(ts.size() > 10);
    for (size_t i = 1; i < ts.size(); ++i)
      CHECK(compare_om(ctx, ts[i - 1], ts[i]) == Ord::Less);
    for (const auto& t : ts) CHECK_NOTHROW(validate_om(ctx, t));
  }
}
