#pragma once

#include <memory>
#include <vector>

#include "ordforge/base_order.hpp"
#include "ordforge/denotation.hpp"
#include "ordforge/term.hpp"

namespace ordforge {

// The tower collapsing systems with one collapsing function th_n per
// level: one relativized by a base order (atoms OmW*@u above OmW), one by
// a denotation system (atoms E{c}(...) above OmW).
enum class OmSystem { OverX, OverD };

struct OmContext {
  OmSystem system = OmSystem::OverX;
  BaseOrder base = BaseOrder::finite(0);               // OverX
  std::shared_ptr<const DenotationSystem> dsys;        // OverD
  int max_level = 3;                                   // enumeration bound

  static OmContext over_base(BaseOrder x, int max_level = 3);
  static OmContext over_denotations(std::shared_ptr<const DenotationSystem> d,
                                    int max_level = 3);
};

// Level-n support: empty for 0 and every Om atom; {arg} together with its
// own level-n support for th_m(arg) when m >= n, empty when m < n; unions
// through sums, omega powers and E-coefficients.
std::vector<TermPtr> om_supp(const OmContext& ctx, int level, const TermPtr& t);

// Enforces formation, including the side condition that every element of
// supp_n(arg) lies strictly below arg for each th_n(arg) subterm.
void validate_om(const OmContext& ctx, const TermPtr& t);

Ord compare_om(const OmContext& ctx, const TermPtr& s, const TermPtr& t);

// Skips the validity check; for terms already known to be normal forms.
Ord compare_om_unchecked(const OmContext& ctx, const TermPtr& s,
                         const TermPtr& t);

// Relabels OmW*@u atoms along f; OverX only.
TermPtr om_map(const OmContext& ctx, const OrderMorphism& f, const TermPtr& t);

// All valid terms of size <= max_size with levels <= ctx.max_level,
// sorted ascending, duplicate-free.
std::vector<TermPtr> enumerate_om(const OmContext& ctx, int max_size);

}  // namespace ordforge
