#include "ordforge/functor.hpp"

#include <algorithm>

#include "ordforge/epsilon.hpp"
#include "ordforge/exp2.hpp"
#include "ordforge/veblen.hpp"

namespace ordforge {

std::vector<std::string> Functor::support(const BaseOrder& x,
                                          const TermPtr& t) const {
  auto labels = base_labels(t);
  std::sort(labels.begin(), labels.end(),
            [&x](const std::string& a, const std::string& b) {
              return x.compare(a, b) == Ord::Less;
            });
  return labels;
}

namespace {

class IdentityFunctor final : public Functor {
 public:
  std::string name() const override { return "id"; }
  std::vector<TermPtr> enumerate(const BaseOrder& x, int) const override {
    std::vector<TermPtr> out;
    for (const auto& e : x.elements()) out.push_back(mk_atom(Head::Elem, e));
    return out;
  }
  Ord compare(const BaseOrder& x, const TermPtr& a,
              const TermPtr& b) const override {
    return x.compare(a->label, b->label);
  }
  TermPtr apply(const OrderMorphism& f, const TermPtr& t) const override {
    return mk_atom(Head::Elem, f.apply(t->label));
  }
};

class ConstantFunctor final : public Functor {
 public:
  explicit ConstantFunctor(int k) : k_(k) {}
  std::string name() const override { return "const" + std::to_string(k_); }
  std::vector<TermPtr> enumerate(const BaseOrder&, int) const override {
    std::vector<TermPtr> out;
    for (int i = 0; i < k_; ++i) out.push_back(mk_atom(Head::Const, "", i));
    return out;
  }
  Ord compare(const BaseOrder&, const TermPtr& a,
              const TermPtr& b) const override {
    if (a->level < b->level) return Ord::Less;
    if (a->level > b->level) return Ord::Greater;
    return Ord::Equal;
  }
  TermPtr apply(const OrderMorphism&, const TermPtr& t) const override {
    return t;
  }

 private:
  int k_;
};

class Exp2Functor final : public Functor {
 public:
  std::string name() const override { return "exp2"; }
  std::vector<TermPtr> enumerate(const BaseOrder& x, int) const override {
    return enumerate_exp2(x);
  }
  Ord compare(const BaseOrder& x, const TermPtr& a,
              const TermPtr& b) const override {
    return compare_exp2(x, a, b);
  }
  TermPtr apply(const OrderMorphism& f, const TermPtr& t) const override {
    return exp2_map(f, t);
  }
};

class EpsFunctor final : public Functor {
 public:
  std::string name() const override { return "eps"; }
  std::vector<TermPtr> enumerate(const BaseOrder& x, int size_bound) const override {
    return enumerate_eps(x, size_bound);
  }
  Ord compare(const BaseOrder& x, const TermPtr& a,
              const TermPtr& b) const override {
    return compare_eps_unchecked(x, a, b);
  }
  TermPtr apply(const OrderMorphism& f, const TermPtr& t) const override {
    return eps_map(f, t);
  }
};

class PhiFunctor final : public Functor {
 public:
  std::string name() const override { return "phi"; }
  std::vector<TermPtr> enumerate(const BaseOrder& x, int size_bound) const override {
    return enumerate_phi(x, size_bound, false);
  }
  Ord compare(const BaseOrder& x, const TermPtr& a,
              const TermPtr& b) const override {
    return compare_veblen_unchecked(x, a, b);
  }
  TermPtr apply(const OrderMorphism& f, const TermPtr& t) const override {
    return phi_map(f, t);
  }
};

}  // namespace

std::shared_ptr<Functor> identity_functor() {
  return std::make_shared<IdentityFunctor>();
}
std::shared_ptr<Functor> constant_functor(int k) {
  return std::make_shared<ConstantFunctor>(k);
}
std::shared_ptr<Functor> exp2_functor() {
  return std::make_shared<Exp2Functor>();
}
std::shared_ptr<Functor> eps_functor() {
  return std::make_shared<EpsFunctor>();
}
std::shared_ptr<Functor> phi_functor() {
  return std::make_shared<PhiFunctor>();
}

}  // namespace ordforge
