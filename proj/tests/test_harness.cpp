#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "json.hpp"
#include "ordforge/exp2.hpp"
#include "ordforge/harness.hpp"
#include "ordforge/parser.hpp"

using namespace ordforge;

namespace {

Fragment eps_fragment(int bound) {
  const SystemInfo& sys = find_system("eps");
  return build_fragment(sys, BaseOrder::finite(1), bound);
}

}  // namespace

TEST_CASE("the registry lists every system exactly once") {
  std::vector<std::string> ids;
  for (const auto& s : system_registry()) ids.push_back(s.id);
  std::vector<std::string> expected = {
      "exp2",   "eps",        "phi",          "gamma", "theta",
      "theta-x", "theta-d-id", "theta-d-exp2", "omw-x", "omw-d"};
  std::sort(ids.begin(), ids.end());
  std::sort(expected.begin(), expected.end());
  CHECK(ids == expected);
  CHECK(find_system("eps").id == "eps");
  CHECK_THROWS_AS(find_system("nope"), ValidationError);
}

TEST_CASE("fragments are ascending and validated") {
  Fragment frag = eps_fragment(4);
  const SystemInfo& sys = find_system("eps");
  BaseOrder x = BaseOrder::finite(1);
  CHECK(frag.terms.size() > 10);
  for (size_t i = 1; i < frag.terms.size(); ++i)
    CHECK(sys.compare(x, frag.terms[i - 1], frag.terms[i]) == Ord::Less);
}

TEST_CASE("order axioms pass for a sound comparator") {
  Fragment frag = eps_fragment(4);
  BaseOrder x = BaseOrder::finite(1);
  const SystemInfo& sys = find_system("eps");
  CheckReport rep = check_order_axioms(
      frag, [&](const TermPtr& a, const TermPtr& b) {
        return sys.compare(x, a, b);
      });
  CHECK(rep.pass);
  CHECK(rep.witnesses.empty());
  CHECK(rep.check == "order-axioms");
}

TEST_CASE("a corrupted comparator is caught with a witness") {
  Fragment frag = eps_fragment(4);
  BaseOrder x = BaseOrder::finite(1);
  const SystemInfo& sys = find_system("eps");
  TermPtr pivot = frag.terms[frag.terms.size() / 2];
  // swap every verdict against the pivot, losing transitivity
  auto bad = [&](const TermPtr& a, const TermPtr& b) {
    Ord r = sys.compare(x, a, b);
    if (term_eq(a, pivot) || term_eq(b, pivot)) return flip(r);
    return r;
  };
  CheckReport rep = check_order_axioms(frag, bad);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.witnesses.empty());
}

TEST_CASE("oracle agreement reports the first disagreement") {
  Fragment frag = eps_fragment(3);
  BaseOrder x = BaseOrder::finite(1);
  const SystemInfo& sys = find_system("eps");
  auto cmp = [&](const TermPtr& a, const TermPtr& b) {
    return sys.compare(x, a, b);
  };
  CheckReport good = oracle_agreement(frag, cmp, cmp);
  CHECK(good.pass);
  auto noisy = [&](const TermPtr& a, const TermPtr& b) {
    Ord r = cmp(a, b);
    return r == Ord::Equal ? Ord::Less : r;
  };
  CheckReport bad = oracle_agreement(frag, cmp, noisy);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.witnesses.empty());
}

TEST_CASE("descent fuzzing is deterministic per seed") {
  Fragment frag = eps_fragment(4);
  BaseOrder x = BaseOrder::finite(1);
  const SystemInfo& sys = find_system("eps");
  auto cmp = [&](const TermPtr& a, const TermPtr& b) {
    return sys.compare(x, a, b);
  };
  CheckReport r1 = descent_fuzz(frag, cmp, 50, 7);
  CheckReport r2 = descent_fuzz(frag, cmp, 50, 7);
  CHECK(r1.pass);
  CHECK(r1.to_json() == r2.to_json());
}

TEST_CASE("functor laws hold for the library functors") {
  for (auto F : {identity_functor(), constant_functor(2), exp2_functor(),
                 eps_functor(), phi_functor()}) {
    CAPTURE(F->name());
    CheckReport rep = check_functor_laws(*F, 3, 4);
    CHECK(rep.pass);
  }
}

TEST_CASE("reports serialize with the full schema") {
  Fragment frag = eps_fragment(3);
  BaseOrder x = BaseOrder::finite(1);
  const SystemInfo& sys = find_system("eps");
  CheckReport rep = check_order_axioms(
      frag, [&](const TermPtr& a, const TermPtr& b) {
        return sys.compare(x, a, b);
      });
  nlohmann::json j = nlohmann::json::parse(rep.to_json());
  CHECK(j.at("check") == "order-axioms");
  CHECK(j.at("system") == "eps");
  CHECK(j.at("bound") == 3);
  CHECK(j.at("pass") == true);
  CHECK(j.at("witnesses").is_array());
  CHECK(rep.to_text().find("PASS") == 0);
}
