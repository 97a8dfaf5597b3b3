#include "ordforge/omega_tower.hpp"

#include <algorithm>
#include <functional>

namespace ordforge {

namespace {

bool is_eps_atom(const TermPtr& t) {
  switch (t->head) {
    case Head::OmegaN:
    case Head::OmegaW:
    case Head::OmegaWTimes:
    case Head::ThetaN:
    case Head::EpsD:
      return true;
    default:
      return false;
  }
}

bool is_principal_om(const TermPtr& t) {
  return t->head == Head::Power || is_eps_atom(t);
}

Ord cmp(const OmContext& ctx, const TermPtr& a, const TermPtr& b);

std::vector<TermPtr> supp_rec(const OmContext& ctx, int level,
                              const TermPtr& t) {
  switch (t->head) {
    case Head::Zero:
    case Head::OmegaN:
    case Head::OmegaW:
    case Head::OmegaWTimes:
      return {};
    case Head::ThetaN: {
      if (t->level < level) return {};
      std::vector<TermPtr> out{t->args[0]};
      for (const auto& g : supp_rec(ctx, level, t->args[0])) out.push_back(g);
      return out;
    }
    case Head::EpsD:
    case Head::Sum: {
      std::vector<TermPtr> out;
      for (const auto& c : t->args)
        for (const auto& g : supp_rec(ctx, level, c)) out.push_back(g);
      return out;
    }
    case Head::Power:
      return supp_rec(ctx, level, t->args[0]);
    default:
      throw ValidationError("head not allowed in tower terms: " + print_term(t));
  }
}

// Atoms below OmW sit on the ladder th_1 < Om_1 < th_2 < Om_2 < ...;
// everything at or above OmW compares within its own group.
int atom_group(const TermPtr& t) {
  switch (t->head) {
    case Head::ThetaN:
    case Head::OmegaN:
      return 0;
    case Head::OmegaW:
      return 1;
    default:
      return 2;  // OmW*@u and E{...}
  }
}

Ord cmp_eps_d(const OmContext& ctx, const TermPtr& p, const TermPtr& q) {
  if (!ctx.dsys)
    throw ValidationError("E{...} terms need a denotation system");
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

Ord cmp_atom(const OmContext& ctx, const TermPtr& p, const TermPtr& q) {
  int gp = atom_group(p), gq = atom_group(q);
  if (gp != gq) return gp < gq ? Ord::Less : Ord::Greater;
  switch (p->head) {
    case Head::ThetaN:
    case Head::OmegaN: {
      // th_n sits at rung 2n-1, Om_n at rung 2n
      int kp = 2 * p->level - (p->head == Head::ThetaN ? 1 : 0);
      int kq = 2 * q->level - (q->head == Head::ThetaN ? 1 : 0);
      if (kp != kq) return kp < kq ? Ord::Less : Ord::Greater;
      if (p->head == Head::ThetaN) return cmp(ctx, p->args[0], q->args[0]);
      return Ord::Equal;
    }
    case Head::OmegaW:
      return Ord::Equal;
    case Head::OmegaWTimes:
      if (q->head != Head::OmegaWTimes)
        throw ValidationError("cross-system comparison above OmW");
      return ctx.base.compare(p->label, q->label);
    case Head::EpsD:
      if (q->head != Head::EpsD)
        throw ValidationError("cross-system comparison above OmW");
      return cmp_eps_d(ctx, p, q);
    default:
      throw ValidationError("not a tower atom: " + print_term(p));
  }
}

Ord cmp_principal(const OmContext& ctx, const TermPtr& p, const TermPtr& q) {
  if (p->head == Head::Power && q->head == Head::Power)
    return cmp(ctx, p->args[0], q->args[0]);
  // an eps-number atom e equals w^e, so mixed cases compare exponents
  if (p->head == Head::Power) return cmp(ctx, p->args[0], q);
  if (q->head == Head::Power) return cmp(ctx, p, q->args[0]);
  return cmp_atom(ctx, p, q);
}

Ord cmp(const OmContext& ctx, const TermPtr& a, const TermPtr& b) {
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

void validate_rec(const OmContext& ctx, const TermPtr& t) {
  switch (t->head) {
    case Head::Zero:
    case Head::OmegaW:
      return;
    case Head::OmegaN:
      if (t->level < 1)
        throw ValidationError("Om_n needs level >= 1");
      return;
    case Head::OmegaWTimes:
      if (ctx.system != OmSystem::OverX)
        throw ValidationError("OmW*@" + t->label +
                              " only exists in the base-relativized system");
      if (!ctx.base.contains(t->label))
        throw ValidationError("OmW*@" + t->label + ": label not in base order " +
                              ctx.base.to_text());
      return;
    case Head::ThetaN: {
      if (t->level < 1)
        throw ValidationError("th_n needs level >= 1");
      validate_rec(ctx, t->args[0]);
      for (const auto& g : supp_rec(ctx, t->level, t->args[0]))
        if (cmp(ctx, g, t->args[0]) != Ord::Less)
          throw ValidationError(
              "th_" + std::to_string(t->level) + "(" + print_term(t->args[0]) +
              "): side condition fails, support element " + print_term(g) +
              " is not below the argument");
      return;
    }
    case Head::EpsD: {
      if (ctx.system != OmSystem::OverD || !ctx.dsys)
        throw ValidationError(
            "E{...} only exists in the denotation-relativized system");
      const auto& shape = ctx.dsys->shape(t->label);
      if (static_cast<int>(t->args.size()) != shape.arity)
        throw ValidationError("E{" + t->label + "} expects " +
                              std::to_string(shape.arity) + " coefficients");
      TermPtr omw = mk_atom(Head::OmegaW);
      for (const auto& c : t->args) {
        validate_rec(ctx, c);
        if (cmp(ctx, c, omw) != Ord::Less)
          throw ValidationError("coefficient " + print_term(c) +
                                " must lie below OmW");
      }
      for (size_t i = 1; i < t->args.size(); ++i)
        if (cmp(ctx, t->args[i - 1], t->args[i]) != Ord::Less)
          throw ValidationError("coefficients must be strictly increasing");
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
        if (!is_principal_om(c))
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
      throw ValidationError("head not allowed in tower terms: " + print_term(t));
  }
}

}  // namespace

OmContext OmContext::over_base(BaseOrder x, int max_level) {
  OmContext ctx;
  ctx.system = OmSystem::OverX;
  ctx.base = std::move(x);
  ctx.max_level = max_level;
  return ctx;
}

OmContext OmContext::over_denotations(
    std::shared_ptr<const DenotationSystem> d, int max_level) {
  OmContext ctx;
  ctx.system = OmSystem::OverD;
  ctx.dsys = std::move(d);
  ctx.max_level = max_level;
  return ctx;
}

std::vector<TermPtr> om_supp(const OmContext& ctx, int level,
                             const TermPtr& t) {
  if (level < 1) throw ValidationError("support level must be >= 1");
  auto raw = supp_rec(ctx, level, t);
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

void validate_om(const OmContext& ctx, const TermPtr& t) {
  validate_rec(ctx, t);
}

Ord compare_om(const OmContext& ctx, const TermPtr& s, const TermPtr& t) {
  validate_rec(ctx, s);
  validate_rec(ctx, t);
  return cmp(ctx, s, t);
}

Ord compare_om_unchecked(const OmContext& ctx, const TermPtr& s,
                         const TermPtr& t) {
  return cmp(ctx, s, t);
}

TermPtr om_map(const OmContext& ctx, const OrderMorphism& f, const TermPtr& t) {
  if (ctx.system != OmSystem::OverX)
    throw ValidationError("om_map applies to the base-relativized system only");
  switch (t->head) {
    case Head::OmegaWTimes:
      return mk_atom(Head::OmegaWTimes, f.apply(t->label));
    case Head::ThetaN:
      return mk_unary(Head::ThetaN, om_map(ctx, f, t->args[0]), "", t->level);
    case Head::Power:
      return mk_unary(Head::Power, om_map(ctx, f, t->args[0]));
    case Head::Sum: {
      std::vector<TermPtr> parts;
      for (const auto& c : t->args) parts.push_back(om_map(ctx, f, c));
      return mk_sum(std::move(parts));
    }
    default:
      return t;
  }
}

std::vector<TermPtr> enumerate_om(const OmContext& ctx, int max_size) {
  if (max_size < 1)
    throw ValidationError("enumerate_om: max_size must be >= 1");
  std::vector<std::vector<TermPtr>> terms(max_size + 1), principals(max_size + 1);
  terms[1].push_back(mk_zero());
  principals[1].push_back(mk_unary(Head::Power, mk_zero()));
  for (int n = 1; n <= ctx.max_level; ++n) {
    principals[1].push_back(mk_unary(Head::ThetaN, mk_zero(), "", n));
    principals[1].push_back(mk_atom(Head::OmegaN, "", n));
  }
  principals[1].push_back(mk_atom(Head::OmegaW));
  if (ctx.system == OmSystem::OverX)
    for (const auto& u : ctx.base.elements())
      principals[1].push_back(mk_atom(Head::OmegaWTimes, u));
  if (ctx.system == OmSystem::OverD && ctx.dsys)
    for (const auto& sh : ctx.dsys->shapes())
      if (sh.arity == 0)
        principals[1].push_back(mk_node(Head::EpsD, sh.index, 0, {}));

  TermPtr omw = mk_atom(Head::OmegaW);
  for (int s = 1; s <= max_size; ++s) {
    if (s >= 2) {
      for (const auto& a : terms[s - 1]) {
        if (is_zero(a)) continue;
        for (int n = 1; n <= ctx.max_level; ++n) {
          bool ok = true;
          for (const auto& g : supp_rec(ctx, n, a))
            if (cmp(ctx, g, a) != Ord::Less) {
              ok = false;
              break;
            }
          if (ok) principals[s].push_back(mk_unary(Head::ThetaN, a, "", n));
        }
        if (!is_eps_atom(a)) principals[s].push_back(mk_unary(Head::Power, a));
      }
      if (ctx.system == OmSystem::OverD && ctx.dsys) {
        std::vector<TermPtr> pool;
        for (int k = 1; k < s; ++k)
          for (const auto& t : terms[k])
            if (cmp(ctx, t, omw) == Ord::Less) pool.push_back(t);
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
