#include "ordforge/veblen.hpp"

#include <algorithm>
#include <functional>

namespace ordforge {

namespace {

bool is_principal_phi(const TermPtr& t) {
  return t->head == Head::Phi || t->head == Head::Gamma;
}

Ord cmp(const BaseOrder& x, const TermPtr& a, const TermPtr& b);

Ord cmp_principal(const BaseOrder& x, const TermPtr& p, const TermPtr& q) {
  if (p->head == Head::Phi && q->head == Head::Phi) {
    Ord idx = x.compare(p->label, q->label);
    if (idx == Ord::Less) return cmp(x, p->args[0], q);
    if (idx == Ord::Equal) return cmp(x, p->args[0], q->args[0]);
    return cmp(x, p, q->args[0]);
  }
  if (p->head == Head::Gamma && q->head == Head::Gamma)
    return x.compare(p->label, q->label);
  if (p->head == Head::Phi && q->head == Head::Gamma) {
    // Gamma atoms absorb the phi layer: phi_u(s) vs G_v is decided by s vs G_v
    return cmp(x, p->args[0], q);
  }
  return flip(cmp_principal(x, q, p));
}

Ord cmp(const BaseOrder& x, const TermPtr& a, const TermPtr& b) {
  bool za = is_zero(a), zb = is_zero(b);
  if (za && zb) return Ord::Equal;
  if (za) return Ord::Less;
  if (zb) return Ord::Greater;
  auto va = summands(a);
  auto vb = summands(b);
  size_t n = std::min(va.size(), vb.size());
  for (size_t i = 0; i < n; ++i) {
    Ord r = cmp_principal(x, va[i], vb[i]);
    if (r != Ord::Equal) return r;
  }
  if (va.size() < vb.size()) return Ord::Less;
  if (va.size() > vb.size()) return Ord::Greater;
  return Ord::Equal;
}

void validate_rec(const BaseOrder& x, const TermPtr& t, bool allow_gamma) {
  switch (t->head) {
    case Head::Zero:
      return;
    case Head::Gamma:
      if (!allow_gamma)
        throw ValidationError("Gamma atoms are only valid in the Gamma system");
      if (!x.contains(t->label))
        throw ValidationError("G[@" + t->label + "]: label not in base order");
      return;
    case Head::Phi: {
      if (!x.contains(t->label))
        throw ValidationError("phi[@" + t->label + "]: label not in base order");
      const TermPtr& arg = t->args[0];
      if (arg->head == Head::Gamma)
        throw ValidationError("phi over a Gamma atom is not in normal form: " +
                              print_term(t));
      if (arg->head == Head::Phi &&
          x.compare(t->label, arg->label) == Ord::Less)
        throw ValidationError("phi index below its argument's index: " +
                              print_term(t) + " is not in normal form");
      validate_rec(x, arg, allow_gamma);
      return;
    }
    case Head::Sum: {
      if (t->args.size() < 2)
        throw ValidationError("sums need at least two components");
      for (const auto& c : t->args) {
        if (!is_principal_phi(c))
          throw ValidationError("sum component " + print_term(c) +
                                " is not additive-principal");
        validate_rec(x, c, allow_gamma);
      }
      for (size_t i = 1; i < t->args.size(); ++i)
        if (cmp_principal(x, t->args[i - 1], t->args[i]) == Ord::Less)
          throw ValidationError("sum components must be non-increasing");
      return;
    }
    default:
      throw ValidationError("head not allowed in phi terms: " + print_term(t));
  }
}

}  // namespace

void validate_phi(const BaseOrder& x, const TermPtr& t, bool allow_gamma) {
  validate_rec(x, t, allow_gamma);
}

Ord compare_phi(const BaseOrder& x, const TermPtr& s, const TermPtr& t) {
  validate_phi(x, s, false);
  validate_phi(x, t, false);
  return cmp(x, s, t);
}

Ord compare_gamma(const BaseOrder& x, const TermPtr& s, const TermPtr& t) {
  validate_phi(x, s, true);
  validate_phi(x, t, true);
  return cmp(x, s, t);
}

Ord compare_veblen_unchecked(const BaseOrder& x, const TermPtr& s,
                             const TermPtr& t) {
  return cmp(x, s, t);
}

TermPtr phi_map(const OrderMorphism& f, const TermPtr& t) {
  switch (t->head) {
    case Head::Phi:
      return mk_unary(Head::Phi, phi_map(f, t->args[0]), f.apply(t->label));
    case Head::Gamma:
      return mk_atom(Head::Gamma, f.apply(t->label));
    case Head::Sum: {
      std::vector<TermPtr> parts;
      for (const auto& c : t->args) parts.push_back(phi_map(f, c));
      return mk_sum(std::move(parts));
    }
    default: return t;
  }
}

TermPtr normalize_phi(const BaseOrder& x, const TermPtr& raw) {
  switch (raw->head) {
    case Head::Phi: {
      TermPtr a = normalize_phi(x, raw->args[0]);
      if (a->head == Head::Gamma) return a;  // phi_u(G_v) = G_v
      if (a->head == Head::Phi && x.compare(raw->label, a->label) == Ord::Less)
        return a;  // phi_u(phi_v t) = phi_v t for u < v
      return mk_unary(Head::Phi, a, raw->label);
    }
    case Head::Sum: {
      std::vector<TermPtr> parts;
      for (const auto& c : raw->args)
        for (const auto& s : summands(normalize_phi(x, c)))
          parts.push_back(s);
      std::stable_sort(parts.begin(), parts.end(),
                       [&x](const TermPtr& a, const TermPtr& b) {
                         return cmp_principal(x, a, b) == Ord::Greater;
                       });
      return mk_sum(std::move(parts));
    }
    default: return raw;
  }
}

std::vector<TermPtr> enumerate_phi(const BaseOrder& x, int max_size,
                                   bool with_gamma) {
  if (max_size < 1) throw ValidationError("enumerate_phi: max_size must be >= 1");
  auto elems = x.elements();
  std::vector<std::vector<TermPtr>> terms(max_size + 1), principals(max_size + 1);
  terms[1].push_back(mk_zero());
  for (const auto& u : elems) {
    principals[1].push_back(mk_unary(Head::Phi, mk_zero(), u));
    if (with_gamma) principals[1].push_back(mk_atom(Head::Gamma, u));
  }

  for (int s = 1; s <= max_size; ++s) {
    if (s >= 2) {
      for (const auto& a : terms[s - 1]) {
        if (is_zero(a)) continue;
        for (const auto& u : elems) {
          if (a->head == Head::Gamma) continue;
          if (a->head == Head::Phi && x.compare(u, a->label) == Ord::Less)
            continue;  // would be absorbed
          principals[s].push_back(mk_unary(Head::Phi, a, u));
        }
      }
    }
    for (const auto& p : principals[s]) terms[s].push_back(p);
    std::vector<TermPtr> pool;
    for (int k = 1; k < s; ++k)
      for (const auto& p : principals[k]) pool.push_back(p);
    std::sort(pool.begin(), pool.end(), [&x](const TermPtr& a, const TermPtr& b) {
      return cmp_principal(x, a, b) == Ord::Greater;
    });
    std::vector<TermPtr> acc;
    std::function<void(size_t, int)> build = [&](size_t start, int remaining) {
      if (acc.size() >= 2 && remaining == 0) terms[s].push_back(mk_sum(acc));
      for (size_t i = start; i < pool.size(); ++i) {
        int sz = term_size(pool[i]);
        if (sz > remaining) continue;
        acc.push_back(pool[i]);
        build(i, remaining - sz);
        acc.pop_back();
      }
    };
    build(0, s);
  }

  std::vector<TermPtr> out;
  for (int s = 1; s <= max_size; ++s)
    for (const auto& t : terms[s]) out.push_back(t);
  std::sort(out.begin(), out.end(), [&x](const TermPtr& a, const TermPtr& b) {
    return cmp(x, a, b) == Ord::Less;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const TermPtr& a, const TermPtr& b) {
                          return term_eq(a, b);
                        }),
            out.end());
  return out;
}

}  // namespace ordforge
