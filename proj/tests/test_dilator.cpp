#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordforge/dilator_checks.hpp"
#include "ordforge/exp2.hpp"
#include "ordforge/parser.hpp"

using namespace ordforge;

namespace {

constexpr int kBound = 5;

// Fixture: exp2 whose morphism action ignores the morphism and relabels
// exponents by source rank. Identity and composition still hold, but the
// range of F(f) depends only on |source|, breaking the range condition.
class RankRelabelExp2 final : public Functor {
 public:
  std::string name() const override { return "broken-range"; }
  std::vector<TermPtr> enumerate(const BaseOrder& x, int) const override {
    return enumerate_exp2(x);
  }
  Ord compare(const BaseOrder& x, const TermPtr& a,
              const TermPtr& b) const override {
    return compare_exp2(x, a, b);
  }
  TermPtr apply(const OrderMorphism& f, const TermPtr& t) const override {
    if (is_zero(t)) return t;
    auto elems = f.target.elements();
    std::vector<TermPtr> parts;
    for (const auto& p : summands(t))
      parts.push_back(
          mk_atom(Head::Pow2, elems[static_cast<size_t>(f.source.rank(p->label))]));
    return mk_sum(std::move(parts));
  }
};

// Fixture: exp2 with a support map that forgets every label, breaking
// the naturality requirements.
class BrokenSupportExp2 final : public Functor {
 public:
  std::string name() const override { return "broken-support"; }
  std::vector<TermPtr> enumerate(const BaseOrder& x, int) const override {
    return enumerate_exp2(x);
  }
  Ord compare(const BaseOrder& x, const TermPtr& a,
              const TermPtr& b) const override {
    return compare_exp2(x, a, b);
  }
  TermPtr apply(const OrderMorphism& f, const TermPtr& t) const override {
    return exp2_map(f, t);
  }
  std::vector<std::string> support(const BaseOrder&,
                                   const TermPtr&) const override {
    return {};
  }
};

bool range_condition_everywhere(const Functor& F, int max_order,
                                std::string* witness) {
  for (int n = 0; n <= max_order; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        for (const auto& f : all_morphisms(a, n))
          for (const auto& g : all_morphisms(b, n)) {
            auto [d, h] = pullback(f, g);
            if (!check_range_condition(F, f, g, h, kBound, witness))
              return false;
          }
  return true;
}

}  // namespace

TEST_CASE("range condition holds for the library functors") {
  for (const auto& F : {exp2_functor(), eps_functor()}) {
    CAPTURE(F->name());
    std::string witness;
    CHECK(range_condition_everywhere(*F, 3, &witness));
    CHECK(witness.empty());
  }
}

TEST_CASE("range condition precondition is enforced") {
  auto F = exp2_functor();
  BaseOrder c = BaseOrder::finite(2);
  OrderMorphism f{BaseOrder::finite(1), c, {{"0", "0"}}};
  OrderMorphism g{BaseOrder::finite(1), c, {{"0", "1"}}};
  OrderMorphism h{BaseOrder::finite(1), c, {{"0", "0"}}};  // not the pullback
  CHECK_THROWS_AS(check_range_condition(*F, f, g, h, kBound), ValidationError);
}

TEST_CASE("a morphism-blind action fails the range condition with a witness") {
  RankRelabelExp2 F;
  std::string witness;
  CHECK_FALSE(range_condition_everywhere(F, 3, &witness));
  CHECK_FALSE(witness.empty());
}

TEST_CASE("finite support finds the minimal arity") {
  auto F = exp2_functor();
  BaseOrder x = BaseOrder::finite(3);
  for (const auto& t : F->enumerate(x, kBound)) {
    SupportWitness w = check_finite_support(*F, x, t, kBound);
    CHECK(w.arity == static_cast<int>(F->support(x, t).size()));
    // the witness morphism really lands on t
    bool hit = false;
    for (const auto& s : F->enumerate(w.f.source, kBound))
      hit = hit || term_eq(F->apply(w.f, s), t);
    CHECK(hit);
  }
  SupportWitness w =
      check_finite_support(*F, x, parse_term("2^@2 + 2^@0"), kBound);
  CHECK(w.arity == 2);
  CHECK(w.f.apply("0") == "0");
  CHECK(w.f.apply("1") == "2");
}

TEST_CASE("supp naturality holds for library functors") {
  for (const auto& F : {exp2_functor(), eps_functor()}) {
    CAPTURE(F->name());
    for (int m = 0; m <= 3; ++m)
      for (int n = m; n <= 3; ++n)
        for (const auto& f : all_morphisms(m, n)) {
          std::string witness;
          CHECK(check_supp_naturality(*F, f, 4, &witness));
          CHECK(witness.empty());
        }
  }
}

TEST_CASE("a broken support map fails naturality with a witness") {
  BrokenSupportExp2 F;
  bool all_ok = true;
  std::string witness;
  for (int m = 0; m <= 2 && all_ok; ++m)
    for (int n = m; n <= 2 && all_ok; ++n)
      for (const auto& f : all_morphisms(m, n))
        if (!check_supp_naturality(F, f, kBound, &witness)) {
          all_ok = false;
          break;
        }
  CHECK_FALSE(all_ok);
  CHECK_FALSE(witness.empty());
}
