#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ordforge/ordering.hpp"
#include "ordforge/tree.hpp"

namespace ordforge {

// Closed numeric terms plus number variables awaiting substitution.
struct NumTerm;
using NumTermPtr = std::shared_ptr<const NumTerm>;

struct NumTerm {
  enum class Kind { Num, Var, Succ, Plus, Times };
  Kind kind;
  long value = 0;     // Num
  std::string var;    // Var
  NumTermPtr a, b;
};

NumTermPtr num_lit(long n);
NumTermPtr num_var(std::string name);
NumTermPtr num_succ(NumTermPtr t);
NumTermPtr num_plus(NumTermPtr a, NumTermPtr b);
NumTermPtr num_times(NumTermPtr a, NumTermPtr b);

bool num_closed(const NumTermPtr& t);
long num_eval(const NumTermPtr& t);  // throws on open terms
std::string print_num(const NumTermPtr& t);

// Formulas in negation normal form. Set references carry either a
// concrete index (U_i) or the name of a bound set variable.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Eq, Neq, In, NotIn, And, Or, ExNum, AllNum, ExSet, AllSet };
  Kind kind;
  NumTermPtr t1, t2;       // literals
  int set_index = -1;      // In/NotIn with a concrete U_i
  std::string set_name;    // In/NotIn with a bound set variable
  std::string var;         // bound variable of a quantifier
  FormulaPtr a, b;
};

FormulaPtr f_eq(NumTermPtr s, NumTermPtr t);
FormulaPtr f_neq(NumTermPtr s, NumTermPtr t);
FormulaPtr f_in(NumTermPtr t, int set_index);
FormulaPtr f_in_var(NumTermPtr t, std::string set_name);
FormulaPtr f_nin(NumTermPtr t, int set_index);
FormulaPtr f_nin_var(NumTermPtr t, std::string set_name);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_ex(std::string var, FormulaPtr body);
FormulaPtr f_all(std::string var, FormulaPtr body);
FormulaPtr f_ex_set(std::string var, FormulaPtr body);
FormulaPtr f_all_set(std::string var, FormulaPtr body);

// De Morgan dual, staying in negation normal form.
FormulaPtr negate(const FormulaPtr& f);

FormulaPtr subst_num(const FormulaPtr& f, const std::string& var, long n);
FormulaPtr subst_set(const FormulaPtr& f, const std::string& name, int index);

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b);
bool is_literal(const FormulaPtr& f);
bool formula_closed(const FormulaPtr& f);
std::string print_formula(const FormulaPtr& f);

// Prefix syntax: and(F,G), or(F,G), ex x.F, all x.F, exS X.F, allS X.F,
// eq(t,t), neq(t,t), in(t,U3), nin(t,U3); terms: numerals, x, S(t),
// plus(t,t), times(t,t).
FormulaPtr parse_formula(const std::string& text);

using Sequent = std::vector<FormulaPtr>;

std::string print_sequent(const Sequent& g);
bool sequent_eq(const Sequent& a, const Sequent& b);

// True iff the sequent contains a true closed literal, or s in U_i and
// t notin U_i with equal values. Throws on open formulas.
bool is_axiomatic(const Sequent& g);

struct Expansion {
  std::vector<Sequent> children;
  bool truncated = false;  // universal number fan-out hit the bound
};

// One expansion step at chain position i. `chain` is the whole deduction
// chain so far (freshness of witnesses is chain-global); its last entry
// is the sequent being expanded. Throws if that sequent is axiomatic.
Expansion expand(const std::vector<Sequent>& chain, int i,
                 const FormulaPtr& axiom_template, int witness_bound);

enum class TreeStatus { AllLeavesAxiomatic, OpenPathFound, DepthExhausted };

struct ChainTree {
  FiniteTree shape;
  std::map<TreeNode, Sequent> sequents;
  TreeStatus status = TreeStatus::AllLeavesAxiomatic;
  bool truncated = false;
  TreeNode open_path_tip;  // deepest node of a detected open path

  std::vector<Sequent> chain_of(const TreeNode& node) const;
  std::string to_json() const;
};

// Grows the deduction-chain tree from the root sequent. A branch whose
// sequent repeats an ancestor's sequent verbatim can be pumped forever
// and is reported as an open path.
ChainTree build_tree(const Sequent& root, const FormulaPtr& axiom_template,
                     int depth, int witness_bound);

// Case-I model: (M)_i collects values of t with "t notin U_i" on the
// path; every U_i occurring on the path gets an entry. Throws if any
// sequent on the path is axiomatic.
std::map<int, std::vector<long>> extract_path_model(
    const std::vector<Sequent>& path);

}  // namespace ordforge
