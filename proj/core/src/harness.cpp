#include "ordforge/harness.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"
#include "ordforge/bachmann.hpp"
#include "ordforge/denotation.hpp"
#include "ordforge/epsilon.hpp"
#include "ordforge/exp2.hpp"
#include "ordforge/omega_tower.hpp"
#include "ordforge/veblen.hpp"

namespace ordforge {

namespace {

std::shared_ptr<const DenotationSystem> identity_denotations() {
  static auto d = denotations_from_functor(identity_functor(), 1, 4);
  return d;
}

std::shared_ptr<const DenotationSystem> exp2_denotations() {
  static auto d = denotations_from_functor(exp2_functor(), 2, 8);
  return d;
}

TermPtr exp2_normalize(const BaseOrder& x, const TermPtr& t) {
  std::vector<std::string> exps;
  for (const auto& s : summands(t)) {
    if (is_zero(s)) continue;
    exps.push_back(s->label);
  }
  return exp2_term(x, std::move(exps));
}

std::vector<SystemInfo> make_registry() {
  std::vector<SystemInfo> out;

  out.push_back({"exp2", "finite base-2 sums over X", true,
                 [](const BaseOrder& x, int) { return enumerate_exp2(x); },
                 [](const BaseOrder& x, const TermPtr& a, const TermPtr& b) {
                   return compare_exp2(x, a, b);
                 },
                 [](const BaseOrder& x, const TermPtr& t) { validate_exp2(x, t); },
                 exp2_normalize});

  out.push_back({"eps", "relativized Cantor normal forms with eps atoms", true,
                 [](const BaseOrder& x, int b) { return enumerate_eps(x, b); },
                 [](const BaseOrder& x, const TermPtr& a, const TermPtr& b) {
                   return compare_eps_unchecked(x, a, b);
                 },
                 [](const BaseOrder& x, const TermPtr& t) { validate_eps(x, t); },
                 [](const BaseOrder& x, const TermPtr& t) {
                   return normalize_eps_term(x, t);
                 }});

  out.push_back({"phi", "two-place Veblen terms over X", true,
                 [](const BaseOrder& x, int b) { return enumerate_phi(x, b, false); },
                 [](const BaseOrder& x, const TermPtr& a, const TermPtr& b) {
                   return compare_veblen_unchecked(x, a, b);
                 },
                 [](const BaseOrder& x, const TermPtr& t) {
                   validate_phi(x, t, false);
                 },
                 [](const BaseOrder& x, const TermPtr& t) {
                   return normalize_phi(x, t);
                 }});

  out.push_back({"gamma", "Veblen terms with Gamma atoms over X", true,
                 [](const BaseOrder& x, int b) { return enumerate_phi(x, b, true); },
                 [](const BaseOrder& x, const TermPtr& a, const TermPtr& b) {
                   return compare_veblen_unchecked(x, a, b);
                 },
                 [](const BaseOrder& x, const TermPtr& t) {
                   validate_phi(x, t, true);
                 },
                 [](const BaseOrder& x, const TermPtr& t) {
                   return normalize_phi(x, t);
                 }});

  auto theta_sys = [](std::string id, std::string desc, bool uses_base,
                      std::function<ThetaContext(const BaseOrder&)> ctx_of) {
    SystemInfo s;
    s.id = std::move(id);
    s.description = std::move(desc);
    s.uses_base = uses_base;
    s.enumerate = [ctx_of](const BaseOrder& x, int b) {
      return enumerate_theta(ctx_of(x), b);
    };
    s.compare = [ctx_of](const BaseOrder& x, const TermPtr& a, const TermPtr& b) {
      return compare_theta_unchecked(ctx_of(x), a, b);
    };
    s.validate = [ctx_of](const BaseOrder& x, const TermPtr& t) {
      validate_theta(ctx_of(x), t);
    };
    s.normalize = [ctx_of](const BaseOrder& x, const TermPtr& t) {
      return normalize_theta_term(ctx_of(x), t);
    };
    return s;
  };

  out.push_back(theta_sys("theta", "plain collapsing terms", false,
                          [](const BaseOrder&) { return ThetaContext::plain(); }));
  out.push_back(theta_sys("theta-x", "collapsing terms with E[@x] atoms", true,
                          [](const BaseOrder& x) {
                            return ThetaContext::over_base(x);
                          }));
  out.push_back(theta_sys(
      "theta-d-id", "collapsing terms over the identity denotations", false,
      [](const BaseOrder&) {
        return ThetaContext::over_denotations(identity_denotations());
      }));
  out.push_back(theta_sys(
      "theta-d-exp2", "collapsing terms over the exp2 denotations", false,
      [](const BaseOrder&) {
        return ThetaContext::over_denotations(exp2_denotations());
      }));

  auto om_sys = [](std::string id, std::string desc, bool uses_base,
                   std::function<OmContext(const BaseOrder&)> ctx_of) {
    SystemInfo s;
    s.id = std::move(id);
    s.description = std::move(desc);
    s.uses_base = uses_base;
    s.enumerate = [ctx_of](const BaseOrder& x, int b) {
      return enumerate_om(ctx_of(x), b);
    };
    s.compare = [ctx_of](const BaseOrder& x, const TermPtr& a, const TermPtr& b) {
      return compare_om_unchecked(ctx_of(x), a, b);
    };
    s.validate = [ctx_of](const BaseOrder& x, const TermPtr& t) {
      validate_om(ctx_of(x), t);
    };
    s.normalize = [ctx_of](const BaseOrder& x, const TermPtr& t) {
      validate_om(ctx_of(x), t);
      return t;
    };
    return s;
  };

  out.push_back(om_sys("omw-x", "tower terms with OmW*@u atoms", true,
                       [](const BaseOrder& x) {
                         return OmContext::over_base(x);
                       }));
  out.push_back(om_sys(
      "omw-d", "tower terms over the identity denotations", false,
      [](const BaseOrder&) {
        return OmContext::over_denotations(identity_denotations());
      }));

  return out;
}

}  // namespace

const std::vector<SystemInfo>& system_registry() {
  static const std::vector<SystemInfo> registry = make_registry();
  return registry;
}

const SystemInfo& find_system(const std::string& id) {
  for (const auto& s : system_registry())
    if (s.id == id) return s;
  std::string known;
  for (const auto& s : system_registry()) known += " " + s.id;
  throw ValidationError("unknown system '" + id + "'; known systems:" + known);
}

Fragment build_fragment(const SystemInfo& sys, const BaseOrder& base,
                        int bound) {
  Fragment frag;
  frag.system = sys.id;
  frag.base = base.to_text();
  frag.bound = bound;
  frag.terms = sys.enumerate(base, bound);
  return frag;
}

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["system"] = system;
  j["bound"] = bound;
  j["pass"] = pass;
  j["witnesses"] = witnesses;
  j["notes"] = notes;
  return j.dump(2);
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << " " << check << " [" << system
     << ", bound " << bound << "]";
  for (const auto& n : notes) os << "\n  note: " << n;
  for (const auto& w : witnesses) os << "\n  witness: " << w;
  return os.str();
}

CheckReport check_order_axioms(
    const Fragment& frag,
    const std::function<Ord(const TermPtr&, const TermPtr&)>& cmp,
    unsigned long seed) {
  CheckReport rep;
  rep.check = "order-axioms";
  rep.system = frag.system;
  rep.bound = frag.bound;
  rep.pass = true;
  const auto& ts = frag.terms;
  const size_t n = ts.size();
  rep.notes.push_back(std::to_string(n) + " terms");
  rep.notes.push_back(
      "wellfoundedness is only surrogated by finite sortedness, not verified");

  for (size_t i = 0; i < n && rep.pass; ++i)
    if (cmp(ts[i], ts[i]) != Ord::Equal) {
      rep.pass = false;
      rep.witnesses.push_back("irreflexivity: " + print_term(ts[i]));
    }
  for (size_t i = 0; i < n && rep.pass; ++i)
    for (size_t j = i + 1; j < n && rep.pass; ++j) {
      Ord r = cmp(ts[i], ts[j]);
      if (r != Ord::Less || cmp(ts[j], ts[i]) != Ord::Greater) {
        rep.pass = false;
        rep.witnesses.push_back("trichotomy: " + print_term(ts[i]) + " vs " +
                                print_term(ts[j]) + " -> " + to_string(r));
      }
    }

  auto check_triple = [&](size_t a, size_t b, size_t c) {
    if (cmp(ts[a], ts[b]) == Ord::Less && cmp(ts[b], ts[c]) == Ord::Less &&
        cmp(ts[a], ts[c]) != Ord::Less) {
      rep.pass = false;
      rep.witnesses.push_back("transitivity: " + print_term(ts[a]) + " < " +
                              print_term(ts[b]) + " < " + print_term(ts[c]));
    }
  };
  if (n <= 300) {
    for (size_t a = 0; a < n && rep.pass; ++a)
      for (size_t b = 0; b < n && rep.pass; ++b)
        for (size_t c = 0; c < n && rep.pass; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, n - 1);
    for (int k = 0; k < 100000 && rep.pass; ++k)
      check_triple(pick(rng), pick(rng), pick(rng));
    rep.notes.push_back("transitivity sampled with 100000 seeded triples");
  }
  return rep;
}

CheckReport oracle_agreement(
    const Fragment& frag,
    const std::function<Ord(const TermPtr&, const TermPtr&)>& cmp,
    const std::function<Ord(const TermPtr&, const TermPtr&)>& oracle) {
  CheckReport rep;
  rep.check = "oracle-agreement";
  rep.system = frag.system;
  rep.bound = frag.bound;
  rep.pass = true;
  const auto& ts = frag.terms;
  long total = 0, agree = 0;
  for (const auto& a : ts)
    for (const auto& b : ts) {
      ++total;
      if (cmp(a, b) == oracle(a, b)) {
        ++agree;
      } else if (rep.pass) {
        rep.pass = false;
        rep.witnesses.push_back(print_term(a) + " vs " + print_term(b) +
                                ": got " + to_string(cmp(a, b)) + ", oracle " +
                                to_string(oracle(a, b)));
      }
    }
  std::ostringstream pct;
  pct << "agreement " << agree << "/" << total;
  rep.notes.push_back(pct.str());
  return rep;
}

CheckReport descent_fuzz(
    const Fragment& frag,
    const std::function<Ord(const TermPtr&, const TermPtr&)>& cmp, int trials,
    unsigned long seed) {
  CheckReport rep;
  rep.check = "descent-fuzz";
  rep.system = frag.system;
  rep.bound = frag.bound;
  rep.pass = true;
  const auto& ts = frag.terms;
  if (ts.empty()) {
    rep.notes.push_back("empty fragment");
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, ts.size() - 1);
  const int mutation_budget = 64;
  size_t max_chain = 0;
  for (int t = 0; t < trials; ++t) {
    size_t cur = pick(rng);
    size_t chain = 1;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int b = 0; b < mutation_budget; ++b) {
        size_t cand = pick(rng);
        if (cmp(ts[cand], ts[cur]) == Ord::Less) {
          cur = cand;
          ++chain;
          moved = true;
          break;
        }
      }
      // strictly descending in a finite strict order cannot outlast it
      if (chain > ts.size()) {
        rep.pass = false;
        rep.witnesses.push_back("suspect nonterminating descent, trial " +
                                std::to_string(t) + ", reached " +
                                print_term(ts[cur]));
        moved = false;
      }
    }
    max_chain = std::max(max_chain, chain);
  }
  rep.notes.push_back("trials " + std::to_string(trials) + ", max chain " +
                      std::to_string(max_chain));
  rep.notes.push_back(
      "termination of all trials surrogates wellfoundedness, it does not prove it");
  return rep;
}

CheckReport check_functor_laws(const Functor& F, int max_order,
                               int size_bound) {
  CheckReport rep;
  rep.check = "functor-laws";
  rep.system = F.name();
  rep.bound = max_order;
  rep.pass = true;

  for (int m = 0; m <= max_order && rep.pass; ++m) {
    BaseOrder x = BaseOrder::finite(m);
    OrderMorphism id = identity_morphism(x);
    for (const auto& t : F.enumerate(x, size_bound))
      if (!term_eq(F.apply(id, t), t)) {
        rep.pass = false;
        rep.witnesses.push_back("identity law: " + print_term(t));
        break;
      }
  }

  for (int a = 0; a <= max_order && rep.pass; ++a)
    for (int b = 0; b <= max_order && rep.pass; ++b)
      for (int c = 0; c <= max_order && rep.pass; ++c)
        for (const auto& f : all_morphisms(a, b)) {
          for (const auto& g : all_morphisms(b, c)) {
            OrderMorphism gf = compose(g, f);
            for (const auto& t : F.enumerate(f.source, size_bound))
              if (!term_eq(F.apply(gf, t), F.apply(g, F.apply(f, t)))) {
                rep.pass = false;
                rep.witnesses.push_back("composition law: " + print_term(t));
                break;
              }
            if (!rep.pass) break;
          }
          if (!rep.pass) break;
        }

  for (int m = 0; m <= max_order && rep.pass; ++m)
    for (int n = 0; n <= max_order && rep.pass; ++n)
      for (const auto& f : all_morphisms(m, n)) {
        auto ts = F.enumerate(f.source, size_bound);
        for (size_t i = 0; i < ts.size() && rep.pass; ++i)
          for (size_t j = i + 1; j < ts.size() && rep.pass; ++j)
            if (F.compare(f.target, F.apply(f, ts[i]), F.apply(f, ts[j])) !=
                Ord::Less) {
              rep.pass = false;
              rep.witnesses.push_back("preservation: " + print_term(ts[i]) +
                                      " vs " + print_term(ts[j]));
            }
        if (!rep.pass) break;
      }

  return rep;
}

}  // namespace ordforge
