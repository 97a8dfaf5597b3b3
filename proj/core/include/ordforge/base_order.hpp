#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordforge/ordering.hpp"

namespace ordforge {

// A linear order with labeled elements. Three kinds:
//   finite(n)   -- elements "0".."n-1" in numeric order
//   omega       -- the naturals, enumerable to any bound
//   explicit    -- a given list of distinct labels, list position = order
//
// Labels are opaque tokens; the order is never derived from label text
// except for the two numeric kinds.
class BaseOrder {
 public:
  enum class Kind { Finite, Omega, Explicit };

  static BaseOrder finite(int n);
  static BaseOrder omega();
  static BaseOrder explicit_order(std::vector<std::string> labels);

  Kind kind() const { return kind_; }
  bool is_enumerable() const { return kind_ != Kind::Omega; }

  // Number of elements for finite/explicit orders.
  int size() const;

  bool contains(const std::string& label) const;

  // Position of a label in the order. For omega this is the numeric value.
  int rank(const std::string& label) const;
  std::string label_at(int rank) const;

  Ord compare(const std::string& a, const std::string& b) const;

  // All elements in ascending order; omega is cut at `omega_bound`.
  std::vector<std::string> elements(int omega_bound = 8) const;

  // Textual syntax: "fin:N", "omega", "list:[a,b,c]".
  std::string to_text() const;
  static BaseOrder parse(const std::string& text);

  bool operator==(const BaseOrder& other) const;

 private:
  BaseOrder(Kind k, int n, std::vector<std::string> labels);

  Kind kind_;
  int n_ = 0;  // finite size
  std::vector<std::string> labels_;
  std::map<std::string, int> rank_;
};

// A strictly order-preserving map between two enumerable orders,
// given as a finite label association total on the source.
struct OrderMorphism {
  BaseOrder source;
  BaseOrder target;
  std::vector<std::pair<std::string, std::string>> map;  // src label -> tgt label

  std::string apply(const std::string& src_label) const;

  std::string to_json() const;
  static OrderMorphism from_json(const std::string& text);
};

OrderMorphism identity_morphism(const BaseOrder& x);
OrderMorphism compose(const OrderMorphism& g, const OrderMorphism& f);  // g after f

// True iff `f` is total on its source and strictly order-preserving on
// every enumerated pair. Throws ValidationError if the map is not total.
bool check_morphism(const OrderMorphism& f);

// The unique h : D -> C with range(h) = range(f) /\ range(g), where D is
// the finite order of the intersection's size. f and g must share target C.
std::pair<BaseOrder, OrderMorphism> pullback(const OrderMorphism& f,
                                             const OrderMorphism& g);

// All strictly increasing maps finite(m) -> finite(n).
std::vector<OrderMorphism> all_morphisms(int m, int n);

// All strictly increasing maps from an enumerable order into another.
std::vector<OrderMorphism> all_morphisms(const BaseOrder& src,
                                         const BaseOrder& tgt);

}  // namespace ordforge
