#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ordforge/base_order.hpp"
#include "ordforge/term.hpp"

namespace ordforge {

// Uniform handle over a notation-system functor on linear orders:
// order -> comparable term fragment, morphism -> term map, term -> finite
// support of base labels. Implementations must be deterministic and pure.
class Functor {
 public:
  virtual ~Functor() = default;

  virtual std::string name() const = 0;

  // Fragment of F(x); `size_bound` caps the term size for infinite F(x)
  // and is ignored by finite functors. Sorted ascending.
  virtual std::vector<TermPtr> enumerate(const BaseOrder& x,
                                         int size_bound) const = 0;

  virtual Ord compare(const BaseOrder& x, const TermPtr& a,
                      const TermPtr& b) const = 0;

  // Action on a morphism, applied to one term.
  virtual TermPtr apply(const OrderMorphism& f, const TermPtr& t) const = 0;

  // Support: base labels the term is built from, ascending in x.
  virtual std::vector<std::string> support(const BaseOrder& x,
                                           const TermPtr& t) const;
};

std::shared_ptr<Functor> identity_functor();
std::shared_ptr<Functor> constant_functor(int k);
std::shared_ptr<Functor> exp2_functor();
std::shared_ptr<Functor> eps_functor();
std::shared_ptr<Functor> phi_functor();

}  // namespace ordforge
