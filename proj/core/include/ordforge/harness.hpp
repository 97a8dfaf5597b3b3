#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ordforge/base_order.hpp"
#include "ordforge/functor.hpp"
#include "ordforge/term.hpp"

namespace ordforge {

// One registered notation system: everything the harness and the CLI
// need, uniformly. Systems that ignore the base order still accept it.
struct SystemInfo {
  std::string id;
  std::string description;
  bool uses_base = false;
  std::function<std::vector<TermPtr>(const BaseOrder&, int bound)> enumerate;
  std::function<Ord(const BaseOrder&, const TermPtr&, const TermPtr&)> compare;
  std::function<void(const BaseOrder&, const TermPtr&)> validate;
  std::function<TermPtr(const BaseOrder&, const TermPtr&)> normalize;
};

const std::vector<SystemInfo>& system_registry();
const SystemInfo& find_system(const std::string& id);

struct Fragment {
  std::string system;
  std::string base;  // base-order text
  int bound = 0;
  std::vector<TermPtr> terms;  // strictly ascending, duplicate-free
};

Fragment build_fragment(const SystemInfo& sys, const BaseOrder& base,
                        int bound);

struct CheckReport {
  std::string check;
  std::string system;
  int bound = 0;
  bool pass = false;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  std::string to_json() const;
  std::string to_text() const;
};

// Irreflexivity, trichotomy (with flip consistency) over all pairs, and
// transitivity: exhaustive for fragments up to 300 terms, sampled with
// 100000 seeded triples above that.
CheckReport check_order_axioms(
    const Fragment& frag,
    const std::function<Ord(const TermPtr&, const TermPtr&)>& cmp,
    unsigned long seed = 0);

// Percentage agreement against an independently written comparator,
// with the first disagreement as witness.
CheckReport oracle_agreement(
    const Fragment& frag,
    const std::function<Ord(const TermPtr&, const TermPtr&)>& cmp,
    const std::function<Ord(const TermPtr&, const TermPtr&)>& oracle);

// Seeded greedy-descent trials over the fragment: each trial walks to
// randomly chosen strictly smaller terms until none is found within the
// mutation budget. A chain longer than the fragment proves a comparator
// cycle and is reported as suspect.
CheckReport descent_fuzz(
    const Fragment& frag,
    const std::function<Ord(const TermPtr&, const TermPtr&)>& cmp, int trials,
    unsigned long seed);

// Identity law, composition law and strict order preservation of the
// morphism action, over all morphisms between finite orders of size
// <= max_order.
CheckReport check_functor_laws(const Functor& F, int max_order,
                               int size_bound);

}  // namespace ordforge
