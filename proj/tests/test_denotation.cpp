#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "ordforge/denotation.hpp"
#include "ordforge/parser.hpp"

using namespace ordforge;

TEST_CASE("extraction reads the shapes off a functor") {
  auto id_d = denotations_from_functor(identity_functor(), 1, 4);
  REQUIRE(id_d->shapes().size() == 1);
  CHECK(id_d->shapes()[0].index == "id.1.0");
  CHECK(id_d->shapes()[0].arity == 1);

  auto e_d = denotations_from_functor(exp2_functor(), 2, 8);
  REQUIRE(e_d->shapes().size() == 3);
  CHECK(e_d->shapes()[0].index == "exp2.0.0");
  CHECK(e_d->shapes()[0].arity == 0);
  CHECK(e_d->shapes()[1].index == "exp2.1.0");
  CHECK(e_d->shapes()[1].arity == 1);
  CHECK(e_d->shapes()[2].index == "exp2.2.0");
  CHECK(e_d->shapes()[2].arity == 2);
  CHECK_THROWS_AS(e_d->shape("exp2.3.0"), ValidationError);
}

TEST_CASE("extracted comparisons match the source functor") {
  auto D = denotations_from_functor(exp2_functor(), 2, 8);
  // zero < 2^@0 < 2^@1 < 2^@1 + 2^@0 over finite(2)
  CHECK(D->compare("exp2.0.0", {}, "exp2.1.0", {0}, 2) == Ord::Less);
  CHECK(D->compare("exp2.1.0", {1}, "exp2.2.0", {0, 1}, 2) == Ord::Less);
  CHECK(D->compare("exp2.2.0", {0, 1}, "exp2.1.0", {1}, 2) == Ord::Greater);
  CHECK(D->compare("exp2.1.0", {0}, "exp2.1.0", {0}, 2) == Ord::Equal);
  CHECK_THROWS_AS(D->compare("exp2.2.0", {1, 0}, "exp2.0.0", {}, 2),
                  ValidationError);
  CHECK_THROWS_AS(D->compare("exp2.1.0", {5}, "exp2.0.0", {}, 2),
                  ValidationError);
}

TEST_CASE("the induced functor reproduces the original order") {
  auto F = exp2_functor();
  auto FD = functor_from_denotations(denotations_from_functor(F, 2, 8));
  for (int n = 0; n <= 3; ++n) {
    BaseOrder x = BaseOrder::finite(n);
    auto orig = F->enumerate(x, 8);
    auto den = FD->enumerate(x, 8);
    // exp2 terms over finite(n) have support size <= 2 only for n <= 2
    if (n <= 2) REQUIRE(den.size() == orig.size());
    for (size_t i = 1; i < den.size(); ++i)
      CHECK(FD->compare(x, den[i - 1], den[i]) == Ord::Less);
  }
  BaseOrder x = BaseOrder::finite(3);
  TermPtr a = parse_term("den{exp2.2.0}(@0,@2)");
  TermPtr b = parse_term("den{exp2.2.0}(@1,@2)");
  CHECK(FD->compare(x, a, b) == Ord::Less);
  OrderMorphism f{BaseOrder::finite(2), x, {{"0", "0"}, {"1", "2"}}};
  CHECK(print_term(FD->apply(f, parse_term("den{exp2.2.0}(@0,@1)"))) ==
        "den{exp2.2.0}(@0,@2)");
}

TEST_CASE("coherence holds for extracted systems") {
  for (auto F : {identity_functor(), exp2_functor()}) {
    auto D = denotations_from_functor(F, 2, 8);
    std::string witness;
    CHECK(check_coherence(*D, 4, &witness));
    CHECK(witness.empty());
  }
}

TEST_CASE("JSON round-trips and tampered tables fail coherence") {
  auto D = denotations_from_functor(exp2_functor(), 2, 8);
  std::string text = denotation_system_to_json(*D, 3);
  auto T = denotation_system_from_json(text);
  CHECK(T->name() == D->name());
  REQUIRE(T->shapes().size() == D->shapes().size());
  CHECK(T->compare("exp2.1.0", {1}, "exp2.2.0", {0, 1}, 2) ==
        D->compare("exp2.1.0", {1}, "exp2.2.0", {0, 1}, 2));
  std::string witness;
  CHECK(check_coherence(*T, 3, &witness));
  CHECK_THROWS_AS(T->compare("exp2.0.0", {}, "exp2.0.0", {}, 9),
                  ValidationError);

  // Flip one strict verdict; the table loses flip symmetry.
  nlohmann::json j = nlohmann::json::parse(text);
  for (auto& e : j["table"])
    if (e["ord"] == "LT" && e["param"] == 2) {
      e["ord"] = "GT";
      break;
    }
  auto broken = denotation_system_from_json(j.dump());
  CHECK_FALSE(check_coherence(*broken, 3, &witness));
  CHECK_FALSE(witness.empty());
}
