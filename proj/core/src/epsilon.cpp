#include "ordforge/epsilon.hpp"

#include <algorithm>
#include <functional>

namespace ordforge {

namespace {

bool is_principal_eps(const TermPtr& t) {
  return t->head == Head::Eps || t->head == Head::Power;
}

Ord cmp(const BaseOrder& x, const TermPtr& a, const TermPtr& b);

Ord cmp_principal(const BaseOrder& x, const TermPtr& p, const TermPtr& q) {
  if (p->head == Head::Eps && q->head == Head::Eps)
    return x.compare(p->label, q->label);
  if (p->head == Head::Power && q->head == Head::Power)
    return cmp(x, p->args[0], q->args[0]);
  if (p->head == Head::Power && q->head == Head::Eps) {
    // w^a vs the eps-number e_u: decided by a vs e_u (w^e_u = e_u)
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

void validate_rec(const BaseOrder& x, const TermPtr& t) {
  switch (t->head) {
    case Head::Zero:
      return;
    case Head::Eps:
      if (!x.contains(t->label))
        throw ValidationError("e[@" + t->label + "]: label not in base order " +
                              x.to_text());
      return;
    case Head::Power:
      if (t->args[0]->head == Head::Eps)
        throw ValidationError("w^e[@" + t->args[0]->label +
                              "] violates the w^eps collapse (formation clause 4)");
      validate_rec(x, t->args[0]);
      return;
    case Head::Sum: {
      if (t->args.size() < 2)
        throw ValidationError("sums need at least two components (formation clause 3)");
      for (const auto& c : t->args) {
        if (!is_principal_eps(c))
          throw ValidationError("sum component " + print_term(c) +
                                " is not an omega power or eps atom");
        validate_rec(x, c);
      }
      for (size_t i = 1; i < t->args.size(); ++i)
        if (cmp_principal(x, t->args[i - 1], t->args[i]) == Ord::Less)
          throw ValidationError(
              "sum components must be non-increasing (formation clause 3)");
      return;
    }
    default:
      throw ValidationError("head not allowed in eps terms: " + print_term(t));
  }
}

}  // namespace

void validate_eps(const BaseOrder& x, const TermPtr& t) { validate_rec(x, t); }

Ord compare_eps(const BaseOrder& x, const TermPtr& s, const TermPtr& t) {
  validate_eps(x, s);
  validate_eps(x, t);
  return cmp(x, s, t);
}

Ord compare_eps_unchecked(const BaseOrder& x, const TermPtr& s,
                          const TermPtr& t) {
  return cmp(x, s, t);
}

TermPtr eps_map(const OrderMorphism& f, const TermPtr& t) {
  switch (t->head) {
    case Head::Eps: return mk_atom(Head::Eps, f.apply(t->label));
    case Head::Power: return mk_unary(Head::Power, eps_map(f, t->args[0]));
    case Head::Sum: {
      std::vector<TermPtr> parts;
      for (const auto& c : t->args) parts.push_back(eps_map(f, c));
      return mk_sum(std::move(parts));
    }
    default: return t;
  }
}

TermPtr normalize_eps(const BaseOrder& x, std::vector<TermPtr> exponents) {
  std::vector<TermPtr> parts;
  for (auto& e : exponents)
    parts.push_back(e->head == Head::Eps ? e : mk_unary(Head::Power, e));
  std::sort(parts.begin(), parts.end(), [&x](const TermPtr& a, const TermPtr& b) {
    return cmp_principal(x, a, b) == Ord::Greater;
  });
  return mk_sum(std::move(parts));
}

TermPtr normalize_eps_term(const BaseOrder& x, const TermPtr& raw) {
  switch (raw->head) {
    case Head::Power: {
      TermPtr a = normalize_eps_term(x, raw->args[0]);
      if (a->head == Head::Eps) return a;
      return mk_unary(Head::Power, a);
    }
    case Head::Sum: {
      std::vector<TermPtr> parts;
      for (const auto& c : raw->args)
        for (const auto& s : summands(normalize_eps_term(x, c)))
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

std::vector<TermPtr> enumerate_eps(const BaseOrder& x, int max_size) {
  if (max_size < 1) throw ValidationError("enumerate_eps: max_size must be >= 1");
  // terms_by_size[s] and principal terms of each size, built bottom-up
  std::vector<std::vector<TermPtr>> terms(max_size + 1), principals(max_size + 1);
  terms[1].push_back(mk_zero());
  principals[1].push_back(mk_unary(Head::Power, mk_zero()));
  for (const auto& u : x.elements()) principals[1].push_back(mk_atom(Head::Eps, u));

  for (int s = 1; s <= max_size; ++s) {
    if (s >= 2) {
      // w^a with size(a) = s-1, a neither 0 nor an eps atom
      for (const auto& a : terms[s - 1])
        if (!is_zero(a) && a->head != Head::Eps)
          principals[s].push_back(mk_unary(Head::Power, a));
    }
    for (const auto& p : principals[s]) terms[s].push_back(p);
    // sums of >= 2 principals, non-increasing, total size s
    std::vector<TermPtr> pool;
    for (int k = 1; k < s; ++k)
      for (const auto& p : principals[k]) pool.push_back(p);
    std::sort(pool.begin(), pool.end(), [&x](const TermPtr& a, const TermPtr& b) {
      return cmp_principal(x, a, b) == Ord::Greater;
    });
    std::vector<TermPtr> acc;
    std::function<void(size_t, int)> build = [&](size_t start, int remaining) {
      if (acc.size() >= 2 && remaining == 0)
        terms[s].push_back(mk_sum(acc));
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
