#include "ordforge/searchtree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "json.hpp"

namespace ordforge {

NumTermPtr num_lit(long n) {
  auto t = std::make_shared<NumTerm>();
  t->kind = NumTerm::Kind::Num;
  t->value = n;
  return t;
}

NumTermPtr num_var(std::string name) {
  auto t = std::make_shared<NumTerm>();
  t->kind = NumTerm::Kind::Var;
  t->var = std::move(name);
  return t;
}

static NumTermPtr num_binary(NumTerm::Kind k, NumTermPtr a, NumTermPtr b) {
  auto t = std::make_shared<NumTerm>();
  t->kind = k;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

NumTermPtr num_succ(NumTermPtr t) {
  auto s = std::make_shared<NumTerm>();
  s->kind = NumTerm::Kind::Succ;
  s->a = std::move(t);
  return s;
}

NumTermPtr num_plus(NumTermPtr a, NumTermPtr b) {
  return num_binary(NumTerm::Kind::Plus, std::move(a), std::move(b));
}

NumTermPtr num_times(NumTermPtr a, NumTermPtr b) {
  return num_binary(NumTerm::Kind::Times, std::move(a), std::move(b));
}

bool num_closed(const NumTermPtr& t) {
  switch (t->kind) {
    case NumTerm::Kind::Num: return true;
    case NumTerm::Kind::Var: return false;
    case NumTerm::Kind::Succ: return num_closed(t->a);
    default: return num_closed(t->a) && num_closed(t->b);
  }
}

long num_eval(const NumTermPtr& t) {
  switch (t->kind) {
    case NumTerm::Kind::Num: return t->value;
    case NumTerm::Kind::Var:
      throw ValidationError("cannot evaluate open term " + print_num(t));
    case NumTerm::Kind::Succ: return num_eval(t->a) + 1;
    case NumTerm::Kind::Plus: return num_eval(t->a) + num_eval(t->b);
    default: return num_eval(t->a) * num_eval(t->b);
  }
}

std::string print_num(const NumTermPtr& t) {
  switch (t->kind) {
    case NumTerm::Kind::Num: return std::to_string(t->value);
    case NumTerm::Kind::Var: return t->var;
    case NumTerm::Kind::Succ: return "S(" + print_num(t->a) + ")";
    case NumTerm::Kind::Plus:
      return "plus(" + print_num(t->a) + "," + print_num(t->b) + ")";
    default:
      return "times(" + print_num(t->a) + "," + print_num(t->b) + ")";
  }
}

static NumTermPtr subst_num_term(const NumTermPtr& t, const std::string& var,
                                 long n) {
  switch (t->kind) {
    case NumTerm::Kind::Num: return t;
    case NumTerm::Kind::Var: return t->var == var ? num_lit(n) : t;
    case NumTerm::Kind::Succ: return num_succ(subst_num_term(t->a, var, n));
    case NumTerm::Kind::Plus:
      return num_plus(subst_num_term(t->a, var, n),
                      subst_num_term(t->b, var, n));
    default:
      return num_times(subst_num_term(t->a, var, n),
                       subst_num_term(t->b, var, n));
  }
}

static bool num_eq(const NumTermPtr& a, const NumTermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case NumTerm::Kind::Num: return a->value == b->value;
    case NumTerm::Kind::Var: return a->var == b->var;
    case NumTerm::Kind::Succ: return num_eq(a->a, b->a);
    default: return num_eq(a->a, b->a) && num_eq(a->b, b->b);
  }
}

static FormulaPtr mk_formula(Formula f) {
  return std::make_shared<Formula>(std::move(f));
}

FormulaPtr f_eq(NumTermPtr s, NumTermPtr t) {
  Formula f;
  f.kind = Formula::Kind::Eq;
  f.t1 = std::move(s);
  f.t2 = std::move(t);
  return mk_formula(std::move(f));
}

FormulaPtr f_neq(NumTermPtr s, NumTermPtr t) {
  Formula f;
  f.kind = Formula::Kind::Neq;
  f.t1 = std::move(s);
  f.t2 = std::move(t);
  return mk_formula(std::move(f));
}

static FormulaPtr f_member(Formula::Kind k, NumTermPtr t, int index,
                           std::string name) {
  Formula f;
  f.kind = k;
  f.t1 = std::move(t);
  f.set_index = index;
  f.set_name = std::move(name);
  return mk_formula(std::move(f));
}

FormulaPtr f_in(NumTermPtr t, int set_index) {
  return f_member(Formula::Kind::In, std::move(t), set_index, "");
}
FormulaPtr f_in_var(NumTermPtr t, std::string set_name) {
  return f_member(Formula::Kind::In, std::move(t), -1, std::move(set_name));
}
FormulaPtr f_nin(NumTermPtr t, int set_index) {
  return f_member(Formula::Kind::NotIn, std::move(t), set_index, "");
}
FormulaPtr f_nin_var(NumTermPtr t, std::string set_name) {
  return f_member(Formula::Kind::NotIn, std::move(t), -1, std::move(set_name));
}

static FormulaPtr f_binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = k;
  f.a = std::move(a);
  f.b = std::move(b);
  return mk_formula(std::move(f));
}

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return f_binary(Formula::Kind::And, std::move(a), std::move(b));
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return f_binary(Formula::Kind::Or, std::move(a), std::move(b));
}

static FormulaPtr f_quant(Formula::Kind k, std::string var, FormulaPtr body) {
  Formula f;
  f.kind = k;
  f.var = std::move(var);
  f.a = std::move(body);
  return mk_formula(std::move(f));
}

FormulaPtr f_ex(std::string var, FormulaPtr body) {
  return f_quant(Formula::Kind::ExNum, std::move(var), std::move(body));
}
FormulaPtr f_all(std::string var, FormulaPtr body) {
  return f_quant(Formula::Kind::AllNum, std::move(var), std::move(body));
}
FormulaPtr f_ex_set(std::string var, FormulaPtr body) {
  return f_quant(Formula::Kind::ExSet, std::move(var), std::move(body));
}
FormulaPtr f_all_set(std::string var, FormulaPtr body) {
  return f_quant(Formula::Kind::AllSet, std::move(var), std::move(body));
}

FormulaPtr negate(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Eq: return f_neq(f->t1, f->t2);
    case Formula::Kind::Neq: return f_eq(f->t1, f->t2);
    case Formula::Kind::In:
      return f_member(Formula::Kind::NotIn, f->t1, f->set_index, f->set_name);
    case Formula::Kind::NotIn:
      return f_member(Formula::Kind::In, f->t1, f->set_index, f->set_name);
    case Formula::Kind::And: return f_or(negate(f->a), negate(f->b));
    case Formula::Kind::Or: return f_and(negate(f->a), negate(f->b));
    case Formula::Kind::ExNum: return f_all(f->var, negate(f->a));
    case Formula::Kind::AllNum: return f_ex(f->var, negate(f->a));
    case Formula::Kind::ExSet: return f_all_set(f->var, negate(f->a));
    default: return f_ex_set(f->var, negate(f->a));
  }
}

FormulaPtr subst_num(const FormulaPtr& f, const std::string& var, long n) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Neq: {
      Formula g = *f;
      g.t1 = subst_num_term(f->t1, var, n);
      g.t2 = subst_num_term(f->t2, var, n);
      return mk_formula(std::move(g));
    }
    case Formula::Kind::In:
    case Formula::Kind::NotIn: {
      Formula g = *f;
      g.t1 = subst_num_term(f->t1, var, n);
      return mk_formula(std::move(g));
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return f_binary(f->kind, subst_num(f->a, var, n), subst_num(f->b, var, n));
    case Formula::Kind::ExNum:
    case Formula::Kind::AllNum:
      if (f->var == var) return f;  // shadowed
      return f_quant(f->kind, f->var, subst_num(f->a, var, n));
    default:
      return f_quant(f->kind, f->var, subst_num(f->a, var, n));
  }
}

FormulaPtr subst_set(const FormulaPtr& f, const std::string& name, int index) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Neq:
      return f;
    case Formula::Kind::In:
    case Formula::Kind::NotIn:
      if (f->set_name == name && f->set_index < 0)
        return f_member(f->kind, f->t1, index, "");
      return f;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return f_binary(f->kind, subst_set(f->a, name, index),
                      subst_set(f->b, name, index));
    case Formula::Kind::ExSet:
    case Formula::Kind::AllSet:
      if (f->var == name) return f;  // shadowed
      return f_quant(f->kind, f->var, subst_set(f->a, name, index));
    default:
      return f_quant(f->kind, f->var, subst_set(f->a, name, index));
  }
}

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Neq:
      return num_eq(a->t1, b->t1) && num_eq(a->t2, b->t2);
    case Formula::Kind::In:
    case Formula::Kind::NotIn:
      return num_eq(a->t1, b->t1) && a->set_index == b->set_index &&
             a->set_name == b->set_name;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return formula_eq(a->a, b->a) && formula_eq(a->b, b->b);
    default:
      return a->var == b->var && formula_eq(a->a, b->a);
  }
}

bool is_literal(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Neq:
    case Formula::Kind::In:
    case Formula::Kind::NotIn:
      return true;
    default:
      return false;
  }
}

static bool closed_rec(const FormulaPtr& f,
                       std::vector<std::string>& num_bound,
                       std::vector<std::string>& set_bound) {
  auto term_closed = [&num_bound](const NumTermPtr& t) {
    std::function<bool(const NumTermPtr&)> rec = [&](const NumTermPtr& u) {
      switch (u->kind) {
        case NumTerm::Kind::Num: return true;
        case NumTerm::Kind::Var:
          return std::find(num_bound.begin(), num_bound.end(), u->var) !=
                 num_bound.end();
        case NumTerm::Kind::Succ: return rec(u->a);
        default: return rec(u->a) && rec(u->b);
      }
    };
    return rec(t);
  };
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Neq:
      return term_closed(f->t1) && term_closed(f->t2);
    case Formula::Kind::In:
    case Formula::Kind::NotIn:
      if (f->set_index < 0 &&
          std::find(set_bound.begin(), set_bound.end(), f->set_name) ==
              set_bound.end())
        return false;
      return term_closed(f->t1);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return closed_rec(f->a, num_bound, set_bound) &&
             closed_rec(f->b, num_bound, set_bound);
    case Formula::Kind::ExNum:
    case Formula::Kind::AllNum: {
      num_bound.push_back(f->var);
      bool r = closed_rec(f->a, num_bound, set_bound);
      num_bound.pop_back();
      return r;
    }
    default: {
      set_bound.push_back(f->var);
      bool r = closed_rec(f->a, num_bound, set_bound);
      set_bound.pop_back();
      return r;
    }
  }
}

bool formula_closed(const FormulaPtr& f) {
  std::vector<std::string> nb, sb;
  return closed_rec(f, nb, sb);
}

std::string print_formula(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Eq:
      return "eq(" + print_num(f->t1) + "," + print_num(f->t2) + ")";
    case Formula::Kind::Neq:
      return "neq(" + print_num(f->t1) + "," + print_num(f->t2) + ")";
    case Formula::Kind::In:
    case Formula::Kind::NotIn: {
      std::string set = f->set_index >= 0 ? "U" + std::to_string(f->set_index)
                                          : f->set_name;
      std::string head = f->kind == Formula::Kind::In ? "in" : "nin";
      return head + "(" + print_num(f->t1) + "," + set + ")";
    }
    case Formula::Kind::And:
      return "and(" + print_formula(f->a) + "," + print_formula(f->b) + ")";
    case Formula::Kind::Or:
      return "or(" + print_formula(f->a) + "," + print_formula(f->b) + ")";
    case Formula::Kind::ExNum:
      return "ex " + f->var + "." + print_formula(f->a);
    case Formula::Kind::AllNum:
      return "all " + f->var + "." + print_formula(f->a);
    case Formula::Kind::ExSet:
      return "exS " + f->var + "." + print_formula(f->a);
    default:
      return "allS " + f->var + "." + print_formula(f->a);
  }
}

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& text) : text_(text) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    skip();
    if (pos_ != text_.size())
      throw ParseError("trailing input after formula", col());
    return f;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;

  int col() const { return static_cast<int>(pos_) + 1; }
  void skip() {
    while (pos_ < text_.size() && isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", col());
  }
  std::string word() {
    skip();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw ParseError("expected an identifier", col());
    return text_.substr(start, pos_ - start);
  }

  NumTermPtr term() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("expected a numeric term", col());
    if (isdigit(static_cast<unsigned char>(text_[pos_]))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return num_lit(std::stol(text_.substr(start, pos_ - start)));
    }
    std::string w = word();
    if (w == "S") {
      if (eat('(')) {
        NumTermPtr t = term();
        expect(')');
        return num_succ(t);
      }
      return num_succ(term());
    }
    if (w == "plus" || w == "times") {
      expect('(');
      NumTermPtr a = term();
      expect(',');
      NumTermPtr b = term();
      expect(')');
      return w == "plus" ? num_plus(a, b) : num_times(a, b);
    }
    // S0-style tokens: successor prefix glued to the rest
    if (w.size() > 1 && w[0] == 'S') {
      size_t rest = 1;
      NumTermPtr t;
      while (rest < w.size() && w[rest] == 'S') ++rest;
      std::string core = w.substr(rest);
      if (!core.empty() && std::all_of(core.begin(), core.end(), ::isdigit))
        t = num_lit(std::stol(core));
      else
        t = num_var(core);
      for (size_t i = 0; i < rest; ++i) t = num_succ(t);
      return t;
    }
    return num_var(w);
  }

  std::pair<int, std::string> set_ref() {
    std::string w = word();
    if (w.size() > 1 && w[0] == 'U' &&
        std::all_of(w.begin() + 1, w.end(), ::isdigit))
      return {std::stoi(w.substr(1)), ""};
    return {-1, w};
  }

  FormulaPtr formula() {
    std::string w = word();
    if (w == "and" || w == "or") {
      expect('(');
      FormulaPtr a = formula();
      expect(',');
      FormulaPtr b = formula();
      expect(')');
      return w == "and" ? f_and(a, b) : f_or(a, b);
    }
    if (w == "eq" || w == "neq") {
      expect('(');
      NumTermPtr a = term();
      expect(',');
      NumTermPtr b = term();
      expect(')');
      return w == "eq" ? f_eq(a, b) : f_neq(a, b);
    }
    if (w == "in" || w == "nin") {
      expect('(');
      NumTermPtr t = term();
      expect(',');
      auto [idx, name] = set_ref();
      expect(')');
      Formula::Kind k = w == "in" ? Formula::Kind::In : Formula::Kind::NotIn;
      return f_member(k, t, idx, name);
    }
    if (w == "ex" || w == "all" || w == "exS" || w == "allS") {
      std::string v = word();
      expect('.');
      FormulaPtr body = formula();
      if (w == "ex") return f_ex(v, body);
      if (w == "all") return f_all(v, body);
      if (w == "exS") return f_ex_set(v, body);
      return f_all_set(v, body);
    }
    throw ParseError("unknown formula head '" + w + "'", col());
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  return FormulaParser(text).parse();
}

std::string print_sequent(const Sequent& g) {
  std::string out = "[";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(g[i]);
  }
  return out + "]";
}

bool sequent_eq(const Sequent& a, const Sequent& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!formula_eq(a[i], b[i])) return false;
  return true;
}

bool is_axiomatic(const Sequent& g) {
  for (const auto& f : g)
    if (!formula_closed(f))
      throw ValidationError("open formula in sequent: " + print_formula(f));
  for (const auto& f : g) {
    if (f->kind == Formula::Kind::Eq && num_eval(f->t1) == num_eval(f->t2))
      return true;
    if (f->kind == Formula::Kind::Neq && num_eval(f->t1) != num_eval(f->t2))
      return true;
  }
  for (const auto& f : g) {
    if (f->kind != Formula::Kind::In || f->set_index < 0) continue;
    for (const auto& h : g) {
      if (h->kind != Formula::Kind::NotIn || h->set_index != f->set_index)
        continue;
      if (num_eval(f->t1) == num_eval(h->t1)) return true;
    }
  }
  return false;
}

namespace {

// The template's one free set variable, instantiated at U_i and negated.
FormulaPtr neg_template_at(const FormulaPtr& axiom_template, int i) {
  std::vector<std::string> names;
  std::function<void(const FormulaPtr&, std::vector<std::string>&)> scan =
      [&](const FormulaPtr& f, std::vector<std::string>& bound) {
        switch (f->kind) {
          case Formula::Kind::In:
          case Formula::Kind::NotIn:
            if (f->set_index < 0 &&
                std::find(bound.begin(), bound.end(), f->set_name) ==
                    bound.end() &&
                std::find(names.begin(), names.end(), f->set_name) ==
                    names.end())
              names.push_back(f->set_name);
            break;
          case Formula::Kind::And:
          case Formula::Kind::Or:
            scan(f->a, bound);
            scan(f->b, bound);
            break;
          case Formula::Kind::ExSet:
          case Formula::Kind::AllSet:
            bound.push_back(f->var);
            scan(f->a, bound);
            bound.pop_back();
            break;
          case Formula::Kind::ExNum:
          case Formula::Kind::AllNum:
            scan(f->a, bound);
            break;
          default:
            break;
        }
      };
  std::vector<std::string> bound;
  scan(axiom_template, bound);
  if (names.size() > 1)
    throw ValidationError("axiom template must have one free set variable");
  FormulaPtr inst = names.empty()
                        ? axiom_template
                        : subst_set(axiom_template, names.front(), i);
  return negate(inst);
}

bool occurs_in_chain(const std::vector<Sequent>& chain, const FormulaPtr& f) {
  for (const auto& g : chain)
    for (const auto& h : g)
      if (formula_eq(h, f)) return true;
  return false;
}

std::set<int> sequent_set_indices(const Sequent& g) {
  std::set<int> out;
  std::function<void(const Formula&)> rec = [&](const Formula& f) {
    if (f.set_index >= 0) out.insert(f.set_index);
    if (f.a) rec(*f.a);
    if (f.b) rec(*f.b);
  };
  for (const auto& f : g) rec(*f);
  return out;
}

}  // namespace

Expansion expand(const std::vector<Sequent>& chain, int i,
                 const FormulaPtr& axiom_template, int witness_bound) {
  if (chain.empty() || i != static_cast<int>(chain.size()) - 1)
    throw ValidationError("expand: i must index the chain's last sequent");
  const Sequent& g = chain.back();
  if (is_axiomatic(g))
    throw ValidationError("cannot expand an axiomatic sequent");
  FormulaPtr tail = neg_template_at(axiom_template, i);

  // Duplicate formulas carry no force in a sequent; keeping children
  // duplicate-free lets stalled branches repeat verbatim and be detected
  // as open paths.
  auto add = [](Sequent& s, const FormulaPtr& f) {
    for (const auto& h : s)
      if (formula_eq(h, f)) return;
    s.push_back(f);
  };

  size_t p = 0;
  while (p < g.size() && is_literal(g[p])) ++p;
  Expansion out;
  if (p == g.size()) {
    Sequent next = g;
    add(next, tail);
    out.children.push_back(std::move(next));
    return out;
  }

  const FormulaPtr& E = g[p];
  auto splice = [&](std::vector<FormulaPtr> middle,
                    std::vector<FormulaPtr> end) {
    Sequent next(g.begin(), g.begin() + p);
    for (auto& m : middle) add(next, m);
    for (auto it = g.begin() + p + 1; it != g.end(); ++it) add(next, *it);
    add(next, tail);
    for (auto& e : end) add(next, e);
    return next;
  };

  switch (E->kind) {
    case Formula::Kind::Or:
      out.children.push_back(splice({E->a, E->b}, {}));
      break;
    case Formula::Kind::And:
      out.children.push_back(splice({E->a}, {}));
      out.children.push_back(splice({E->b}, {}));
      break;
    case Formula::Kind::ExNum: {
      long m = 0;
      while (occurs_in_chain(chain, subst_num(E->a, E->var, m))) ++m;
      out.children.push_back(splice({subst_num(E->a, E->var, m)}, {E}));
      break;
    }
    case Formula::Kind::AllNum: {
      for (long m = 0; m < witness_bound; ++m)
        out.children.push_back(splice({subst_num(E->a, E->var, m)}, {}));
      out.truncated = true;
      break;
    }
    case Formula::Kind::ExSet: {
      int m = 0;
      while (occurs_in_chain(chain, subst_set(E->a, E->var, m))) ++m;
      out.children.push_back(splice({subst_set(E->a, E->var, m)}, {E}));
      break;
    }
    case Formula::Kind::AllSet: {
      auto used = sequent_set_indices(g);
      int m = 0;
      while (m == i + 1 || used.count(m)) ++m;
      out.children.push_back(splice({subst_set(E->a, E->var, m)}, {}));
      break;
    }
    default:
      throw ValidationError("redex is a literal");
  }
  return out;
}

std::vector<Sequent> ChainTree::chain_of(const TreeNode& node) const {
  std::vector<Sequent> chain;
  TreeNode prefix;
  chain.push_back(sequents.at(prefix));
  for (int step : node) {
    prefix.push_back(step);
    chain.push_back(sequents.at(prefix));
  }
  return chain;
}

std::string ChainTree::to_json() const {
  nlohmann::json j;
  switch (status) {
    case TreeStatus::AllLeavesAxiomatic: j["status"] = "all-leaves-axiomatic"; break;
    case TreeStatus::OpenPathFound: j["status"] = "open-path-found"; break;
    default: j["status"] = "depth-exhausted"; break;
  }
  j["truncated"] = truncated;
  if (status == TreeStatus::OpenPathFound) j["open_path_tip"] = open_path_tip;
  j["nodes"] = nlohmann::json::array();
  for (const auto& node : shape.nodes()) {
    nlohmann::json entry;
    entry["node"] = node;
    entry["chain"] = nlohmann::json::array();
    for (const auto& g : chain_of(node))
      entry["chain"].push_back(print_sequent(g));
    j["nodes"].push_back(std::move(entry));
  }
  return j.dump(2);
}

ChainTree build_tree(const Sequent& root, const FormulaPtr& axiom_template,
                     int depth, int witness_bound) {
  if (depth < 1 || witness_bound < 1)
    throw ValidationError("build_tree: depth and witness_bound must be >= 1");
  ChainTree tree;
  tree.shape.insert({});
  tree.sequents.emplace(TreeNode{}, root);
  bool any_open = false, any_exhausted = false;

  std::function<void(const TreeNode&, std::vector<Sequent>&)> grow =
      [&](const TreeNode& node, std::vector<Sequent>& chain) {
        const Sequent& g = chain.back();
        if (is_axiomatic(g)) return;
        // a verbatim repetition can be pumped into an infinite path
        for (size_t k = 0; k + 1 < chain.size(); ++k)
          if (sequent_eq(chain[k], g)) {
            any_open = true;
            if (tree.open_path_tip.empty() || node.size() > tree.open_path_tip.size())
              tree.open_path_tip = node;
            return;
          }
        if (static_cast<int>(node.size()) >= depth) {
          any_exhausted = true;
          return;
        }
        Expansion exp = expand(chain, static_cast<int>(chain.size()) - 1,
                               axiom_template, witness_bound);
        tree.truncated = tree.truncated || exp.truncated;
        for (size_t c = 0; c < exp.children.size(); ++c) {
          TreeNode child = node;
          child.push_back(static_cast<int>(c));
          tree.shape.insert(child);
          tree.sequents.emplace(child, exp.children[c]);
          chain.push_back(exp.children[c]);
          grow(child, chain);
          chain.pop_back();
        }
      };

  std::vector<Sequent> chain{root};
  grow({}, chain);

  if (any_open)
    tree.status = TreeStatus::OpenPathFound;
  else if (any_exhausted)
    tree.status = TreeStatus::DepthExhausted;
  else
    tree.status = TreeStatus::AllLeavesAxiomatic;
  return tree;
}

std::map<int, std::vector<long>> extract_path_model(
    const std::vector<Sequent>& path) {
  for (const auto& g : path)
    if (is_axiomatic(g))
      throw ValidationError("model extraction needs a non-axiomatic path");
  std::map<int, std::vector<long>> model;
  for (const auto& g : path)
    for (const auto& f : g) {
      if (f->set_index < 0) continue;
      if (f->kind == Formula::Kind::In) model.try_emplace(f->set_index);
      if (f->kind == Formula::Kind::NotIn) {
        auto& vals = model[f->set_index];
        long v = num_eval(f->t1);
        if (std::find(vals.begin(), vals.end(), v) == vals.end())
          vals.push_back(v);
      }
    }
  return model;
}

}  // namespace ordforge
