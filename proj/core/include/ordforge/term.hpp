#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ordforge/ordering.hpp"

namespace ordforge {

// One immutable tree shape serves every notation system; each system
// restricts which heads may occur and enforces its own normal form.
enum class Head {
  Zero,         // 0
  Sum,          // t + t + ...      additive components, non-increasing
  Power,        // w^t              omega power, exponent never an eps-number atom
  Pow2,         // 2^@x             exp2 summand
  Eps,          // e[@u]
  Phi,          // phi[@u](t)
  Gamma,        // G[@u]
  Theta,        // th(t)
  Omega,        // Om
  EpsX,         // E[@x]
  EpsD,         // E{c}(t1,...,tn)  label = shape index, args = coefficients
  OmegaN,       // Om_n             level in `level`
  OmegaW,       // OmW
  OmegaWTimes,  // OmW*@u
  ThetaN,       // th_n(t)
  Elem,         // el[@x]           identity-functor element
  Const,        // c_i              constant-functor element, level = i
  Den,          // den{c}(@a,...)   denotation term, coefficient labels as Elem args
};

struct TermNode;
using TermPtr = std::shared_ptr<const TermNode>;

struct TermNode {
  Head head;
  std::string label;          // base label or shape index
  int level = 0;              // OmegaN / ThetaN level, Const position
  std::vector<TermPtr> args;
};

TermPtr mk_zero();
TermPtr mk_atom(Head h, std::string label = "", int level = 0);
TermPtr mk_unary(Head h, TermPtr arg, std::string label = "", int level = 0);
TermPtr mk_sum(std::vector<TermPtr> components);  // unwraps singletons
TermPtr mk_node(Head h, std::string label, int level, std::vector<TermPtr> args);

bool term_eq(const TermPtr& a, const TermPtr& b);
bool is_zero(const TermPtr& t);

// Number of atoms; a unary constructor on 0 counts as a single atom, so
// w^0 and th(0) have size 1 and fragments stay finite per size bound.
int term_size(const TermPtr& t);

// Additive view: Sum -> components, anything else -> the singleton list.
std::vector<TermPtr> summands(const TermPtr& t);

std::string print_term(const TermPtr& t);

// Collects the base labels referenced by Pow2/Eps/Phi/Gamma/EpsX/
// OmegaWTimes/Elem/Den atoms, duplicate-free in first-occurrence order.
std::vector<std::string> base_labels(const TermPtr& t);

}  // namespace ordforge
