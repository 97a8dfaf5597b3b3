#include "ordforge/exp2.hpp"

#include <algorithm>

namespace ordforge {

namespace {

// Exponent labels, largest first.
std::vector<std::string> exponents_of(const TermPtr& t) {
  std::vector<std::string> out;
  for (const auto& s : summands(t)) out.push_back(s->label);
  return out;
}

}  // namespace

void validate_exp2(const BaseOrder& x, const TermPtr& t) {
  if (is_zero(t)) return;
  auto parts = summands(t);
  for (const auto& p : parts) {
    if (p->head != Head::Pow2)
      throw ValidationError("exp2 terms are sums of 2^@label powers, got " +
                            print_term(p));
    if (!x.contains(p->label))
      throw ValidationError("exponent '@" + p->label + "' is not in the base order " +
                            x.to_text());
  }
  for (size_t i = 1; i < parts.size(); ++i)
    if (x.compare(parts[i - 1]->label, parts[i]->label) != Ord::Greater)
      throw ValidationError("exp2 exponents must be strictly decreasing");
}

Ord compare_exp2(const BaseOrder& x, const TermPtr& s, const TermPtr& t) {
  validate_exp2(x, s);
  validate_exp2(x, t);
  auto a = is_zero(s) ? std::vector<std::string>{} : exponents_of(s);
  auto b = is_zero(t) ? std::vector<std::string>{} : exponents_of(t);
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    Ord r = x.compare(a[i], b[i]);
    if (r != Ord::Equal) return r;
  }
  if (a.size() < b.size()) return Ord::Less;
  if (a.size() > b.size()) return Ord::Greater;
  return Ord::Equal;
}

TermPtr exp2_map(const OrderMorphism& f, const TermPtr& t) {
  if (is_zero(t)) return t;
  std::vector<TermPtr> parts;
  for (const auto& p : summands(t))
    parts.push_back(mk_atom(Head::Pow2, f.apply(p->label)));
  return mk_sum(std::move(parts));
}

std::vector<TermPtr> enumerate_exp2(const BaseOrder& x) {
  auto elems = x.elements();
  int n = static_cast<int>(elems.size());
  if (n > 20) throw ValidationError("enumerate_exp2: base too large");
  std::vector<TermPtr> out;
  out.reserve(static_cast<size_t>(1) << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<TermPtr> parts;
    for (int i = n - 1; i >= 0; --i)
      if (mask & (1u << i)) parts.push_back(mk_atom(Head::Pow2, elems[i]));
    out.push_back(parts.empty() ? mk_zero() : mk_sum(std::move(parts)));
  }
  std::sort(out.begin(), out.end(), [&x](const TermPtr& a, const TermPtr& b) {
    return compare_exp2(x, a, b) == Ord::Less;
  });
  return out;
}

TermPtr exp2_term(const BaseOrder& x, std::vector<std::string> exponents) {
  std::sort(exponents.begin(), exponents.end(),
            [&x](const std::string& a, const std::string& b) {
              return x.compare(a, b) == Ord::Greater;
            });
  std::vector<TermPtr> parts;
  for (const auto& e : exponents) parts.push_back(mk_atom(Head::Pow2, e));
  TermPtr t = parts.empty() ? mk_zero() : mk_sum(std::move(parts));
  validate_exp2(x, t);
  return t;
}

}  // namespace ordforge
