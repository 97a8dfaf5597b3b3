#pragma once

#include <vector>

#include "ordforge/base_order.hpp"
#include "ordforge/term.hpp"

namespace ordforge {

// The relativized two-place Veblen functor phi_X and its Gamma extension.
// Terms: 0, phi[@u](t), G[@u] (Gamma system only), and sums of those.
// Normal form: in phi[@u](s), s is neither phi[@v](t) with u < v nor a
// Gamma atom (both would be absorbed as fixed points).

void validate_phi(const BaseOrder& x, const TermPtr& t, bool allow_gamma);

// Total comparator implementing the three-clause phi rule; on non-normal
// input it reports the fixed-point identifications as Equal.
Ord compare_phi(const BaseOrder& x, const TermPtr& s, const TermPtr& t);
Ord compare_gamma(const BaseOrder& x, const TermPtr& s, const TermPtr& t);

// Skips the validity check; for terms already known to be normal forms.
Ord compare_veblen_unchecked(const BaseOrder& x, const TermPtr& s,
                             const TermPtr& t);

TermPtr phi_map(const OrderMorphism& f, const TermPtr& t);

// Fixed-point absorption + sum flattening/sorting; idempotent.
TermPtr normalize_phi(const BaseOrder& x, const TermPtr& raw);

std::vector<TermPtr> enumerate_phi(const BaseOrder& x, int max_size,
                                   bool with_gamma = false);

}  // namespace ordforge
