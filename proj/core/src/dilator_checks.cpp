#include "ordforge/dilator_checks.hpp"

#include <algorithm>
#include <set>

namespace ordforge {

namespace {

std::set<std::string> range_keys(const Functor& F, const OrderMorphism& f,
                                 int size_bound) {
  std::set<std::string> keys;
  for (const auto& t : F.enumerate(f.source, size_bound))
    keys.insert(print_term(F.apply(f, t)));
  return keys;
}

std::set<int> morphism_range(const OrderMorphism& f) {
  std::set<int> out;
  for (const auto& [a, b] : f.map) out.insert(f.target.rank(b));
  return out;
}

}  // namespace

bool check_range_condition(const Functor& F, const OrderMorphism& f,
                           const OrderMorphism& g, const OrderMorphism& h,
                           int size_bound, std::string* witness) {
  if (!(f.target == g.target) || !(f.target == h.target))
    throw ValidationError("range condition: morphisms must share a target");
  auto rf = morphism_range(f), rg = morphism_range(g), rh = morphism_range(h);
  std::set<int> expect;
  std::set_intersection(rf.begin(), rf.end(), rg.begin(), rg.end(),
                        std::inserter(expect, expect.begin()));
  if (rh != expect)
    throw ValidationError("range condition precondition violated: "
                          "ran(h) != ran(f) /\\ ran(g)");

  auto Ff = range_keys(F, f, size_bound);
  auto Fg = range_keys(F, g, size_bound);
  auto Fh = range_keys(F, h, size_bound);
  std::set<std::string> both;
  std::set_intersection(Ff.begin(), Ff.end(), Fg.begin(), Fg.end(),
                        std::inserter(both, both.begin()));
  if (Fh == both) return true;
  if (witness) {
    std::vector<std::string> diff;
    std::set_symmetric_difference(Fh.begin(), Fh.end(), both.begin(), both.end(),
                                  std::back_inserter(diff));
    *witness = diff.empty() ? "?" : diff.front();
  }
  return false;
}

SupportWitness check_finite_support(const Functor& F, const BaseOrder& x,
                                    const TermPtr& t, int size_bound) {
  const std::string key = print_term(t);
  int max_n = static_cast<int>(x.elements().size());
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& f : all_morphisms(BaseOrder::finite(n), x)) {
      for (const auto& s : F.enumerate(f.source, size_bound)) {
        if (print_term(F.apply(f, s)) == key) return {n, f};
      }
    }
  }
  throw ValidationError("finite support not found for " + key +
                        " within bound " + std::to_string(size_bound));
}

bool check_supp_naturality(const Functor& F, const OrderMorphism& f,
                           int size_bound, std::string* witness) {
  const BaseOrder& x = f.source;
  const BaseOrder& y = f.target;
  for (const auto& sigma : F.enumerate(x, size_bound)) {
    // supp_Y(F(f)(sigma)) == f[supp_X(sigma)]
    auto lhs = F.support(y, F.apply(f, sigma));
    std::vector<std::string> rhs;
    for (const auto& l : F.support(x, sigma)) rhs.push_back(f.apply(l));
    std::sort(rhs.begin(), rhs.end(), [&y](const std::string& a, const std::string& b) {
      return y.compare(a, b) == Ord::Less;
    });
    if (lhs != rhs) {
      if (witness) *witness = "supp square fails on " + print_term(sigma);
      return false;
    }
    // sigma in ran(F(iota_sigma)) for the support inclusion
    auto supp = F.support(x, sigma);
    BaseOrder sub = BaseOrder::explicit_order(supp);
    OrderMorphism iota{sub, x, {}};
    for (const auto& l : supp) iota.map.emplace_back(l, l);
    bool found = false;
    const std::string key = print_term(sigma);
    for (const auto& s : F.enumerate(sub, size_bound)) {
      if (print_term(F.apply(iota, s)) == key) {
        found = true;
        break;
      }
    }
    if (!found) {
      if (witness)
        *witness = print_term(sigma) + " not in ran(F(iota)) over its support";
      return false;
    }
  }
  return true;
}

}  // namespace ordforge
