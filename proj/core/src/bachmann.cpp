#include "ordforge/bachmann.hpp"

#include <algorithm>
#include <functional>

namespace ordforge {

namespace {

bool is_eps_atom(const TermPtr& t) {
  return t->head == Head::Theta || t->head == Head::Omega ||
         t->head == Head::EpsX || t->head == Head::EpsD;
}

bool is_principal_theta(const TermPtr& t) {
  return t->head == Head::Power || is_eps_atom(t);
}

Ord cmp(const ThetaContext& ctx, const TermPtr& a, const TermPtr& b);

std::vector<TermPtr> supp_rec(const ThetaContext& ctx, const TermPtr& t) {
  switch (t->head) {
    case Head::Zero:
    case Head::Omega:
    case Head::EpsX:
      return {};
    case Head::Theta:
      return {t};
    case Head::EpsD:
      return t->args;
    case Head::Power:
      return supp_rec(ctx, t->args[0]);
    case Head::Sum: {
      std::vector<TermPtr> out;
      for (const auto& c : t->args)
        for (const auto& s : supp_rec(ctx, c)) out.push_back(s);
      return out;
    }
    default:
      throw ValidationError("head not allowed in theta terms: " + print_term(t));
  }
}

// th(a) < th(b) per the collapsing rule: a below b with every support
// element of a below th(b), or th(a) at most some support element of b.
bool theta_less(const ThetaContext& ctx, const TermPtr& s, const TermPtr& t) {
  const TermPtr& a = s->args[0];
  const TermPtr& b = t->args[0];
  if (cmp(ctx, a, b) == Ord::Less) {
    bool below = true;
    for (const auto& g : supp_rec(ctx, a))
      if (cmp(ctx, g, t) != Ord::Less) {
        below = false;
        break;
      }
    if (below) return true;
  }
  for (const auto& g : supp_rec(ctx, b))
    if (cmp(ctx, s, g) != Ord::Greater) return true;
  return false;
}

Ord cmp_eps_d(const ThetaContext& ctx, const TermPtr& p, const TermPtr& q) {
  if (!ctx.dsys)
    throw ValidationError("E{...} terms need a denotation system");
  // Collapse both coefficient tuples into one finite order.
  std::vector<TermPtr> pool;
  for (const auto& c : p->args) pool.push_back(c);
  for (const auto& c : q->args) pool.push_back(c);
  std::sort(pool.begin(), pool.end(), [&ctx](const TermPtr& a, const TermPtr& b) {
    return cmp(ctx, a, b) == Ord::Less;
  });
  pool.erase(std::unique(pool.begin(), pool.end(),
                         [&ctx](const TermPtr& a, const TermPtr& b) {
                           return cmp(ctx, a, b) == Ord::Equal;
                         }),
             pool.end());
  auto ranks = [&](const TermPtr& t) {
    std::vector<int> out;
    for (const auto& c : t->args)
      for (size_t i = 0; i < pool.size(); ++i)
        if (cmp(ctx, c, pool[i]) == Ord::Equal) {
          out.push_back(static_cast<int>(i));
          break;
        }
    return out;
  };
  return ctx.dsys->compare(p->label, ranks(p), q->label, ranks(q),
                           static_cast<int>(pool.size()));
}

int atom_layer(const TermPtr& t) {
  switch (t->head) {
    case Head::Theta: return 0;
    case Head::Omega: return 1;
    default: return 2;  // E-atoms
  }
}

Ord cmp_principal(const ThetaContext& ctx, const TermPtr& p, const TermPtr& q) {
  if (p->head == Head::Power && q->head == Head::Power)
    return cmp(ctx, p->args[0], q->args[0]);
  // an eps-number atom e equals w^e, so mixed cases compare exponents
  if (p->head == Head::Power) return cmp(ctx, p->args[0], q);
  if (q->head == Head::Power) return cmp(ctx, p, q->args[0]);

  int lp = atom_layer(p), lq = atom_layer(q);
  if (lp != lq) return lp < lq ? Ord::Less : Ord::Greater;
  switch (p->head) {
    case Head::Theta:
      if (theta_less(ctx, p, q)) return Ord::Less;
      if (theta_less(ctx, q, p)) return Ord::Greater;
      return Ord::Equal;
    case Head::Omega:
      return Ord::Equal;
    case Head::EpsX:
      if (q->head != Head::EpsX)
        throw ValidationError("cross-system comparison of E-atoms");
      return ctx.base.compare(p->label, q->label);
    case Head::EpsD:
      if (q->head != Head::EpsD)
        throw ValidationError("cross-system comparison of E-atoms");
      return cmp_eps_d(ctx, p, q);
    default:
      throw ValidationError("not a principal theta term: " + print_term(p));
  }
}

Ord cmp(const ThetaContext& ctx, const TermPtr& a, const TermPtr& b) {
  bool za = is_zero(a), zb = is_zero(b);
  if (za && zb) return Ord::Equal;
  if (za) return Ord::Less;
  if (zb) return Ord::Greater;
  auto va = summands(a);
  auto vb = summands(b);
  size_t n = std::min(va.size(), vb.size());
  for (size_t i = 0; i < n; ++i) {
    Ord r = cmp_principal(ctx, va[i], vb[i]);
    if (r != Ord::Equal) return r;
  }
  if (va.size() < vb.size()) return Ord::Less;
  if (va.size() > vb.size()) return Ord::Greater;
  return Ord::Equal;
}

void validate_rec(const ThetaContext& ctx, const TermPtr& t) {
  switch (t->head) {
    case Head::Zero:
    case Head::Omega:
      return;
    case Head::Theta:
      validate_rec(ctx, t->args[0]);
      return;
    case Head::EpsX:
      if (ctx.system != ThetaSystem::OverX)
        throw ValidationError("E[@" + t->label +
                              "] only exists in the relativized system");
      if (!ctx.base.contains(t->label))
        throw ValidationError("E[@" + t->label + "]: label not in base order " +
                              ctx.base.to_text());
      return;
    case Head::EpsD: {
      if (ctx.system != ThetaSystem::OverD || !ctx.dsys)
        throw ValidationError(
            "E{...} only exists in the denotation-relativized system");
      const auto& shape = ctx.dsys->shape(t->label);
      if (static_cast<int>(t->args.size()) != shape.arity)
        throw ValidationError("E{" + t->label + "} expects " +
                              std::to_string(shape.arity) + " coefficients");
      TermPtr om = mk_atom(Head::Omega);
      for (const auto& c : t->args) {
        validate_rec(ctx, c);
        if (cmp(ctx, c, om) != Ord::Less)
          throw ValidationError("coefficient " + print_term(c) +
                                " must lie below Om (formation clause iv)");
      }
      for (size_t i = 1; i < t->args.size(); ++i)
        if (cmp(ctx, t->args[i - 1], t->args[i]) != Ord::Less)
          throw ValidationError(
              "coefficients must be strictly increasing (formation clause iv)");
      return;
    }
    case Head::Power:
      if (is_eps_atom(t->args[0]))
        throw ValidationError("w^" + print_term(t->args[0]) +
                              " violates the eps-number collapse");
      validate_rec(ctx, t->args[0]);
      return;
    case Head::Sum: {
      if (t->args.size() < 2)
        throw ValidationError("sums need at least two components");
      for (const auto& c : t->args) {
        if (!is_principal_theta(c))
          throw ValidationError("sum component " + print_term(c) +
                                " is not principal");
        validate_rec(ctx, c);
      }
      for (size_t i = 1; i < t->args.size(); ++i)
        if (cmp_principal(ctx, t->args[i - 1], t->args[i]) == Ord::Less)
          throw ValidationError("sum components must be non-increasing");
      return;
    }
    default:
      throw ValidationError("head not allowed in theta terms: " + print_term(t));
  }
}

}  // namespace

ThetaContext ThetaContext::plain() { return {}; }

ThetaContext ThetaContext::over_base(BaseOrder x) {
  ThetaContext ctx;
  ctx.system = ThetaSystem::OverX;
  ctx.base = std::move(x);
  return ctx;
}

ThetaContext ThetaContext::over_denotations(
    std::shared_ptr<const DenotationSystem> d) {
  ThetaContext ctx;
  ctx.system = ThetaSystem::OverD;
  ctx.dsys = std::move(d);
  return ctx;
}

std::vector<TermPtr> theta_supp(const ThetaContext& ctx, const TermPtr& t) {
  auto raw = supp_rec(ctx, t);
  std::vector<TermPtr> out;
  for (const auto& s : raw) {
    bool seen = false;
    for (const auto& o : out)
      if (term_eq(o, s)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [&ctx](const TermPtr& a, const TermPtr& b) {
    return cmp(ctx, a, b) == Ord::Less;
  });
  return out;
}

void validate_theta(const ThetaContext& ctx, const TermPtr& t) {
  validate_rec(ctx, t);
}

Ord compare_theta(const ThetaContext& ctx, const TermPtr& s, const TermPtr& t) {
  validate_rec(ctx, s);
  validate_rec(ctx, t);
  return cmp(ctx, s, t);
}

Ord compare_theta_unchecked(const ThetaContext& ctx, const TermPtr& s,
                            const TermPtr& t) {
  return cmp(ctx, s, t);
}

TermPtr theta_map(const ThetaContext& ctx, const OrderMorphism& f,
                  const TermPtr& t) {
  if (ctx.system != ThetaSystem::OverX)
    throw ValidationError("theta_map applies to the relativized system only");
  switch (t->head) {
    case Head::EpsX: return mk_atom(Head::EpsX, f.apply(t->label));
    case Head::Theta: return mk_unary(Head::Theta, theta_map(ctx, f, t->args[0]));
    case Head::Power: return mk_unary(Head::Power, theta_map(ctx, f, t->args[0]));
    case Head::Sum: {
      std::vector<TermPtr> parts;
      for (const auto& c : t->args) parts.push_back(theta_map(ctx, f, c));
      return mk_sum(std::move(parts));
    }
    default: return t;
  }
}

TermPtr normalize_theta_term(const ThetaContext& ctx, const TermPtr& raw) {
  switch (raw->head) {
    case Head::Theta:
      return mk_unary(Head::Theta, normalize_theta_term(ctx, raw->args[0]));
    case Head::EpsD: {
      std::vector<TermPtr> coeffs;
      for (const auto& c : raw->args)
        coeffs.push_back(normalize_theta_term(ctx, c));
      return mk_node(Head::EpsD, raw->label, 0, std::move(coeffs));
    }
    case Head::Power: {
      TermPtr a = normalize_theta_term(ctx, raw->args[0]);
      if (is_eps_atom(a)) return a;
      return mk_unary(Head::Power, a);
    }
    case Head::Sum: {
      std::vector<TermPtr> parts;
      for (const auto& c : raw->args)
        for (const auto& s : summands(normalize_theta_term(ctx, c)))
          if (!is_zero(s)) parts.push_back(s);
      std::stable_sort(parts.begin(), parts.end(),
                       [&ctx](const TermPtr& a, const TermPtr& b) {
                         return cmp_principal(ctx, a, b) == Ord::Greater;
                       });
      return mk_sum(std::move(parts));
    }
    default: return raw;
  }
}

std::vector<TermPtr> enumerate_theta(const ThetaContext& ctx, int max_size) {
  if (max_size < 1)
    throw ValidationError("enumerate_theta: max_size must be >= 1");
  std::vector<std::vector<TermPtr>> terms(max_size + 1), principals(max_size + 1);
  terms[1].push_back(mk_zero());
  principals[1].push_back(mk_unary(Head::Theta, mk_zero()));
  principals[1].push_back(mk_unary(Head::Power, mk_zero()));
  principals[1].push_back(mk_atom(Head::Omega));
  if (ctx.system == ThetaSystem::OverX)
    for (const auto& u : ctx.base.elements())
      principals[1].push_back(mk_atom(Head::EpsX, u));
  if (ctx.system == ThetaSystem::OverD && ctx.dsys)
    for (const auto& sh : ctx.dsys->shapes())
      if (sh.arity == 0)
        principals[1].push_back(mk_node(Head::EpsD, sh.index, 0, {}));

  TermPtr om = mk_atom(Head::Omega);
  for (int s = 1; s <= max_size; ++s) {
    if (s >= 2) {
      for (const auto& a : terms[s - 1]) {
        if (is_zero(a)) continue;
        principals[s].push_back(mk_unary(Head::Theta, a));
        if (!is_eps_atom(a)) principals[s].push_back(mk_unary(Head::Power, a));
      }
      if (ctx.system == ThetaSystem::OverD && ctx.dsys) {
        // coefficients: strictly increasing sub-Om terms, sizes summing to s-1
        std::vector<TermPtr> pool;
        for (int k = 1; k < s; ++k)
          for (const auto& t : terms[k])
            if (cmp(ctx, t, om) == Ord::Less) pool.push_back(t);
        std::sort(pool.begin(), pool.end(),
                  [&ctx](const TermPtr& a, const TermPtr& b) {
                    return cmp(ctx, a, b) == Ord::Less;
                  });
        for (const auto& sh : ctx.dsys->shapes()) {
          if (sh.arity == 0) continue;
          std::vector<TermPtr> acc;
          std::function<void(size_t, int)> build = [&](size_t start,
                                                       int remaining) {
            if (static_cast<int>(acc.size()) == sh.arity) {
              if (remaining == 0)
                principals[s].push_back(mk_node(Head::EpsD, sh.index, 0, acc));
              return;
            }
            for (size_t i = start; i < pool.size(); ++i) {
              int sz = term_size(pool[i]);
              if (sz > remaining) continue;
              acc.push_back(pool[i]);
              build(i + 1, remaining - sz);
              acc.pop_back();
            }
          };
          build(0, s - 1);
        }
      }
    }
    for (const auto& p : principals[s]) terms[s].push_back(p);
    std::vector<TermPtr> pool;
    for (int k = 1; k < s; ++k)
      for (const auto& p : principals[k]) pool.push_back(p);
    std::sort(pool.begin(), pool.end(), [&ctx](const TermPtr& a, const TermPtr& b) {
      return cmp_principal(ctx, a, b) == Ord::Greater;
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
  std::sort(out.begin(), out.end(), [&ctx](const TermPtr& a, const TermPtr& b) {
    return cmp(ctx, a, b) == Ord::Less;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const TermPtr& a, const TermPtr& b) {
                          return term_eq(a, b);
                        }),
            out.end());
  return out;
}

}  // namespace ordforge
