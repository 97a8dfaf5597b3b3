#pragma once

#include <memory>
#include <vector>

#include "ordforge/base_order.hpp"
#include "ordforge/denotation.hpp"
#include "ordforge/term.hpp"

namespace ordforge {

// The three collapsing systems sharing the th/Om layer: the plain one,
// the one with an eps-atom E[@x] per base element, and the one whose
// eps-atoms E{c}(...) carry denotation coefficients below Om.
enum class ThetaSystem { Plain, OverX, OverD };

struct ThetaContext {
  ThetaSystem system = ThetaSystem::Plain;
  BaseOrder base = BaseOrder::finite(0);                // OverX
  std::shared_ptr<const DenotationSystem> dsys;         // OverD

  static ThetaContext plain();
  static ThetaContext over_base(BaseOrder x);
  static ThetaContext over_denotations(
      std::shared_ptr<const DenotationSystem> d);
};

// Support below Om: empty for 0, Om and E[@x]; {t} for th-terms; the
// coefficient set, not recursed into, for E{c}(...); unions through sums
// and omega powers.
std::vector<TermPtr> theta_supp(const ThetaContext& ctx, const TermPtr& t);

void validate_theta(const ThetaContext& ctx, const TermPtr& t);

Ord compare_theta(const ThetaContext& ctx, const TermPtr& s, const TermPtr& t);

// Skips the validity check; for terms already known to be normal forms.
Ord compare_theta_unchecked(const ThetaContext& ctx, const TermPtr& s,
                            const TermPtr& t);

// Relabels E[@x] atoms along f; OverX only.
TermPtr theta_map(const ThetaContext& ctx, const OrderMorphism& f,
                  const TermPtr& t);

// Flattens sums, sorts components non-increasing, drops zero components.
TermPtr normalize_theta_term(const ThetaContext& ctx, const TermPtr& raw);

// All valid terms of size <= max_size, sorted ascending, duplicate-free.
std::vector<TermPtr> enumerate_theta(const ThetaContext& ctx, int max_size);

}  // namespace ordforge
