#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ordforge/functor.hpp"

namespace ordforge {

struct DenotationShape {
  std::string index;  // opaque token
  int arity;          // number of coefficients
};

// A family of denotation shapes with a coherent comparison rule:
// comparisons between (c; a_0..a_{n-1}; k) and (d; b_0..b_{m-1}; k) over
// a shared finite parameter depend only on the coefficients' positions.
class DenotationSystem {
 public:
  virtual ~DenotationSystem() = default;

  virtual std::string name() const = 0;
  virtual const std::vector<DenotationShape>& shapes() const = 0;

  // Coefficients are ranks into finite(param), strictly increasing.
  virtual Ord compare(const std::string& c, const std::vector<int>& a,
                      const std::string& d, const std::vector<int>& b,
                      int param) const = 0;

  const DenotationShape& shape(const std::string& index) const;
};

// Extracts the denotation system of a functor: for each n <= max_arity the
// shape indices are the fragment elements of F(finite(n)) whose minimal
// support is exactly n; comparisons are delegated to F.
std::shared_ptr<DenotationSystem> denotations_from_functor(
    std::shared_ptr<const Functor> F, int max_arity, int size_bound);

// The induced functor F_D: terms over X are denotations with coefficient
// labels from X; the morphism action relabels coefficients.
std::shared_ptr<Functor> functor_from_denotations(
    std::shared_ptr<const DenotationSystem> D);

// Coefficient tuples with the same order pattern must compare alike;
// checked exhaustively for parameters up to max_param.
bool check_coherence(const DenotationSystem& D, int max_param,
                     std::string* witness = nullptr);

// JSON wire format: shapes plus a comparison table per parameter size.
std::string denotation_system_to_json(const DenotationSystem& D, int max_param);
std::shared_ptr<DenotationSystem> denotation_system_from_json(
    const std::string& text);

}  // namespace ordforge
