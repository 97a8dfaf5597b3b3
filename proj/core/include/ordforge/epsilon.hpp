#pragma once

#include <vector>

#include "ordforge/base_order.hpp"
#include "ordforge/term.hpp"

namespace ordforge {

// The epsilon functor X -> eps_X: relativized Cantor normal forms with a
// formal eps-number e[@u] for every base element, the identification
// w^e[@u] = e[@u] built into the normal form.

void validate_eps(const BaseOrder& x, const TermPtr& t);

Ord compare_eps(const BaseOrder& x, const TermPtr& s, const TermPtr& t);

// Skips the validity check; for terms already known to be normal forms.
Ord compare_eps_unchecked(const BaseOrder& x, const TermPtr& s,
                          const TermPtr& t);

TermPtr eps_map(const OrderMorphism& f, const TermPtr& t);

// Builds the normal form of w^{a_1}+...+w^{a_n} from exponent terms:
// sorts non-increasing, collapses w^e[@u] to e[@u], unwraps singletons.
TermPtr normalize_eps(const BaseOrder& x, std::vector<TermPtr> exponents);

// Whole-term renormalization (flattens sums, applies the collapse
// recursively); identity on normal forms.
TermPtr normalize_eps_term(const BaseOrder& x, const TermPtr& raw);

// All valid terms of size <= max_size, sorted ascending, duplicate-free.
std::vector<TermPtr> enumerate_eps(const BaseOrder& x, int max_size);

}  // namespace ordforge
