#include "ordforge/term.hpp"

#include <algorithm>

namespace ordforge {

TermPtr mk_zero() {
  static const TermPtr zero = std::make_shared<TermNode>(TermNode{Head::Zero, "", 0, {}});
  return zero;
}

TermPtr mk_atom(Head h, std::string label, int level) {
  return std::make_shared<TermNode>(TermNode{h, std::move(label), level, {}});
}

TermPtr mk_unary(Head h, TermPtr arg, std::string label, int level) {
  return std::make_shared<TermNode>(
      TermNode{h, std::move(label), level, {std::move(arg)}});
}

TermPtr mk_sum(std::vector<TermPtr> components) {
  if (components.empty()) return mk_zero();
  if (components.size() == 1) return components[0];
  return std::make_shared<TermNode>(TermNode{Head::Sum, "", 0, std::move(components)});
}

TermPtr mk_node(Head h, std::string label, int level, std::vector<TermPtr> args) {
  return std::make_shared<TermNode>(
      TermNode{h, std::move(label), level, std::move(args)});
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->head != b->head || a->label != b->label || a->level != b->level ||
      a->args.size() != b->args.size())
    return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!term_eq(a->args[i], b->args[i])) return false;
  return true;
}

bool is_zero(const TermPtr& t) { return t && t->head == Head::Zero; }

int term_size(const TermPtr& t) {
  switch (t->head) {
    case Head::Zero: return 1;
    case Head::Sum: {
      int s = 0;
      for (const auto& a : t->args) s += term_size(a);
      return s;
    }
    case Head::Power:
    case Head::Phi:
    case Head::Theta:
    case Head::ThetaN:
      return is_zero(t->args[0]) ? 1 : 1 + term_size(t->args[0]);
    case Head::EpsD:
    case Head::Den: {
      int s = 1;
      for (const auto& a : t->args) s += term_size(a);
      return s;
    }
    default: return 1;  // label atoms
  }
}

std::vector<TermPtr> summands(const TermPtr& t) {
  if (t->head == Head::Sum) return t->args;
  return {t};
}

namespace {

void print_rec(const TermPtr& t, std::string& out) {
  switch (t->head) {
    case Head::Zero: out += "0"; break;
    case Head::Sum:
      for (size_t i = 0; i < t->args.size(); ++i) {
        if (i) out += " + ";
        print_rec(t->args[i], out);
      }
      break;
    case Head::Power:
      out += "w^";
      if (t->args[0]->head == Head::Sum) {
        out += "(";
        print_rec(t->args[0], out);
        out += ")";
      } else {
        print_rec(t->args[0], out);
      }
      break;
    case Head::Pow2: out += "2^@" + t->label; break;
    case Head::Eps: out += "e[@" + t->label + "]"; break;
    case Head::Phi:
      out += "phi[@" + t->label + "](";
      print_rec(t->args[0], out);
      out += ")";
      break;
    case Head::Gamma: out += "G[@" + t->label + "]"; break;
    case Head::Theta:
      out += "th(";
      print_rec(t->args[0], out);
      out += ")";
      break;
    case Head::Omega: out += "Om"; break;
    case Head::EpsX: out += "E[@" + t->label + "]"; break;
    case Head::EpsD:
      out += "E{" + t->label + "}(";
      for (size_t i = 0; i < t->args.size(); ++i) {
        if (i) out += ",";
        print_rec(t->args[i], out);
      }
      out += ")";
      break;
    case Head::OmegaN: out += "Om_" + std::to_string(t->level); break;
    case Head::OmegaW: out += "OmW"; break;
    case Head::OmegaWTimes: out += "OmW*@" + t->label; break;
    case Head::ThetaN:
      out += "th_" + std::to_string(t->level) + "(";
      print_rec(t->args[0], out);
      out += ")";
      break;
    case Head::Elem: out += "el[@" + t->label + "]"; break;
    case Head::Const: out += "c_" + std::to_string(t->level); break;
    case Head::Den:
      out += "den{" + t->label + "}(";
      for (size_t i = 0; i < t->args.size(); ++i) {
        if (i) out += ",";
        out += "@" + t->args[i]->label;
      }
      out += ")";
      break;
  }
}

void collect_labels(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->head) {
    case Head::Pow2:
    case Head::Eps:
    case Head::Gamma:
    case Head::EpsX:
    case Head::OmegaWTimes:
    case Head::Elem:
      out.push_back(t->label);
      break;
    case Head::Phi:
      out.push_back(t->label);
      break;
    default: break;
  }
  for (const auto& a : t->args) collect_labels(a, out);
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::string out;
  print_rec(t, out);
  return out;
}

std::vector<std::string> base_labels(const TermPtr& t) {
  std::vector<std::string> all;
  collect_labels(t, all);
  std::vector<std::string> dedup;
  for (auto& l : all)
    if (std::find(dedup.begin(), dedup.end(), l) == dedup.end())
      dedup.push_back(l);
  return dedup;
}

}  // namespace ordforge
