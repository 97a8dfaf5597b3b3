#pragma once

#include <optional>
#include <string>

#include "ordforge/functor.hpp"

namespace ordforge {

// Verifies ran(F(h)) = ran(F(f)) /\ ran(F(g)) on the size-bounded
// fragments, given ran(h) = ran(f) /\ ran(g) (checked; violations throw).
// On failure `witness`, when non-null, receives a printed counterexample.
bool check_range_condition(const Functor& F, const OrderMorphism& f,
                           const OrderMorphism& g, const OrderMorphism& h,
                           int size_bound, std::string* witness = nullptr);

struct SupportWitness {
  int arity;        // minimal n
  OrderMorphism f;  // finite(n) -> X with the term in ran(F(f))
};

// Minimal n and f: finite(n) -> X such that `t` is in ran(F(f)). Scans
// n = 0.. up to |X|; throws ValidationError when nothing is found within
// the fragment bound (non-dilator behavior or bound too small).
SupportWitness check_finite_support(const Functor& F, const BaseOrder& x,
                                    const TermPtr& t, int size_bound);

// The prae-dilator conditions for one morphism f: naturality of supp and
// sigma in ran(F(iota_sigma)) for every fragment term sigma.
bool check_supp_naturality(const Functor& F, const OrderMorphism& f,
                           int size_bound, std::string* witness = nullptr);

}  // namespace ordforge
