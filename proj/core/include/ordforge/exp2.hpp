#pragma once

#include <vector>

#include "ordforge/base_order.hpp"
#include "ordforge/term.hpp"

namespace ordforge {

// The base-2 exponential functor X -> 2^X: formal sums 2^{x_1}+...+2^{x_n}
// with strictly decreasing exponents. The empty sum is the least term.

// Throws ValidationError naming the violated formation condition.
void validate_exp2(const BaseOrder& x, const TermPtr& t);

// Position-wise lexicographic from the largest exponent; a proper prefix
// is smaller.
Ord compare_exp2(const BaseOrder& x, const TermPtr& s, const TermPtr& t);

TermPtr exp2_map(const OrderMorphism& f, const TermPtr& t);

// All 2^n terms over a finite order, sorted ascending.
std::vector<TermPtr> enumerate_exp2(const BaseOrder& x);

// Builds a term from an exponent set (any order; sorted internally).
TermPtr exp2_term(const BaseOrder& x, std::vector<std::string> exponents);

}  // namespace ordforge
