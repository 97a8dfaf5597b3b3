#include "ordforge/denotation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ordforge {

const DenotationShape& DenotationSystem::shape(const std::string& index) const {
  for (const auto& s : shapes())
    if (s.index == index) return s;
  throw ValidationError("unknown denotation shape: " + index);
}

namespace {

std::string tuple_key(const std::string& c, const std::vector<int>& a) {
  std::ostringstream os;
  os << c << '(';
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

std::string entry_key(const std::string& c, const std::vector<int>& a,
                      const std::string& d, const std::vector<int>& b,
                      int param) {
  return tuple_key(c, a) + "|" + tuple_key(d, b) + "@" + std::to_string(param);
}

void require_coeffs(const DenotationShape& s, const std::vector<int>& a,
                    int param) {
  if (static_cast<int>(a.size()) != s.arity)
    throw ValidationError("shape " + s.index + " expects " +
                          std::to_string(s.arity) + " coefficients");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= param)
      throw ValidationError("coefficient out of range for parameter " +
                            std::to_string(param));
    if (i > 0 && a[i] <= a[i - 1])
      throw ValidationError("coefficients must be strictly increasing");
  }
}

// Shapes read off a functor: the representative term lives over
// finite(arity) and uses all of it.
class ExtractedDenotationSystem final : public DenotationSystem {
 public:
  ExtractedDenotationSystem(std::shared_ptr<const Functor> F, int max_arity,
                            int size_bound)
      : F_(std::move(F)), size_bound_(size_bound) {
    for (int n = 0; n <= max_arity; ++n) {
      BaseOrder x = BaseOrder::finite(n);
      int pos = 0;
      for (const auto& t : F_->enumerate(x, size_bound)) {
        if (static_cast<int>(F_->support(x, t).size()) != n) continue;
        std::string index =
            F_->name() + "." + std::to_string(n) + "." + std::to_string(pos++);
        shapes_.push_back({index, n});
        reps_.emplace(index, t);
      }
    }
  }

  std::string name() const override { return F_->name(); }
  const std::vector<DenotationShape>& shapes() const override {
    return shapes_;
  }

  Ord compare(const std::string& c, const std::vector<int>& a,
              const std::string& d, const std::vector<int>& b,
              int param) const override {
    require_coeffs(shape(c), a, param);
    require_coeffs(shape(d), b, param);
    BaseOrder k = BaseOrder::finite(param);
    return F_->compare(k, realize(c, a, k), realize(d, b, k));
  }

  TermPtr realize(const std::string& c, const std::vector<int>& a,
                  const BaseOrder& k) const {
    auto it = reps_.find(c);
    if (it == reps_.end()) throw ValidationError("unknown denotation shape: " + c);
    OrderMorphism f{BaseOrder::finite(static_cast<int>(a.size())), k, {}};
    for (size_t i = 0; i < a.size(); ++i)
      f.map.emplace_back(std::to_string(i), k.label_at(a[i]));
    return F_->apply(f, it->second);
  }

  const Functor& functor() const { return *F_; }
  int size_bound() const { return size_bound_; }

 private:
  std::shared_ptr<const Functor> F_;
  int size_bound_;
  std::vector<DenotationShape> shapes_;
  std::map<std::string, TermPtr> reps_;
};

// A denotation system given purely by tables, one per parameter size.
class TableDenotationSystem final : public DenotationSystem {
 public:
  TableDenotationSystem(std::string name, std::vector<DenotationShape> shapes,
                        int max_param, std::map<std::string, Ord> table)
      : name_(std::move(name)),
        shapes_(std::move(shapes)),
        max_param_(max_param),
        table_(std::move(table)) {}

  std::string name() const override { return name_; }
  const std::vector<DenotationShape>& shapes() const override {
    return shapes_;
  }

  Ord compare(const std::string& c, const std::vector<int>& a,
              const std::string& d, const std::vector<int>& b,
              int param) const override {
    require_coeffs(shape(c), a, param);
    require_coeffs(shape(d), b, param);
    if (param > max_param_)
      throw ValidationError("parameter exceeds tabled maximum " +
                            std::to_string(max_param_));
    auto it = table_.find(entry_key(c, a, d, b, param));
    if (it == table_.end())
      throw ValidationError("comparison not tabled: " +
                            entry_key(c, a, d, b, param));
    return it->second;
  }

  int max_param() const { return max_param_; }

 private:
  std::string name_;
  std::vector<DenotationShape> shapes_;
  int max_param_;
  std::map<std::string, Ord> table_;
};

std::vector<std::vector<int>> increasing_tuples(int arity, int param) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == arity) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v < param; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// The functor induced by a denotation system: terms are denotations with
// coefficient labels drawn from the base order.
class DenotationFunctor final : public Functor {
 public:
  explicit DenotationFunctor(std::shared_ptr<const DenotationSystem> D)
      : D_(std::move(D)) {}

  std::string name() const override { return D_->name() + "-den"; }

  std::vector<TermPtr> enumerate(const BaseOrder& x,
                                 int size_bound) const override {
    auto labels = x.elements();
    int n = static_cast<int>(labels.size());
    std::vector<TermPtr> out;
    for (const auto& s : D_->shapes()) {
      if (1 + s.arity > size_bound && size_bound > 0) continue;
      for (const auto& tup : increasing_tuples(s.arity, n)) {
        std::vector<TermPtr> coeffs;
        for (int r : tup) coeffs.push_back(mk_atom(Head::Elem, labels[r]));
        out.push_back(mk_node(Head::Den, s.index, 0, std::move(coeffs)));
      }
    }
    std::sort(out.begin(), out.end(), [this, &x](const TermPtr& a, const TermPtr& b) {
      return compare(x, a, b) == Ord::Less;
    });
    return out;
  }

  Ord compare(const BaseOrder& x, const TermPtr& a,
              const TermPtr& b) const override {
    if (a->head != Head::Den || b->head != Head::Den)
      throw ValidationError("denotation functor compares den{...} terms only");
    // Collapse both coefficient tuples into one finite order.
    std::vector<std::string> pool;
    for (const auto& c : a->args) pool.push_back(c->label);
    for (const auto& c : b->args) pool.push_back(c->label);
    std::sort(pool.begin(), pool.end(),
              [&x](const std::string& p, const std::string& q) {
                return x.compare(p, q) == Ord::Less;
              });
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    auto ranks = [&pool](const TermPtr& t) {
      std::vector<int> out;
      for (const auto& c : t->args) {
        auto it = std::find(pool.begin(), pool.end(), c->label);
        out.push_back(static_cast<int>(it - pool.begin()));
      }
      return out;
    };
    return D_->compare(a->label, ranks(a), b->label, ranks(b),
                       static_cast<int>(pool.size()));
  }

  TermPtr apply(const OrderMorphism& f, const TermPtr& t) const override {
    if (t->head != Head::Den)
      throw ValidationError("denotation functor maps den{...} terms only");
    std::vector<TermPtr> coeffs;
    for (const auto& c : t->args)
      coeffs.push_back(mk_atom(Head::Elem, f.apply(c->label)));
    return mk_node(Head::Den, t->label, 0, std::move(coeffs));
  }

 private:
  std::shared_ptr<const DenotationSystem> D_;
};

}  // namespace

std::shared_ptr<DenotationSystem> denotations_from_functor(
    std::shared_ptr<const Functor> F, int max_arity, int size_bound) {
  return std::make_shared<ExtractedDenotationSystem>(std::move(F), max_arity,
                                                     size_bound);
}

std::shared_ptr<Functor> functor_from_denotations(
    std::shared_ptr<const DenotationSystem> D) {
  return std::make_shared<DenotationFunctor>(std::move(D));
}

bool check_coherence(const DenotationSystem& D, int max_param,
                     std::string* witness) {
  auto fail = [&](const std::string& msg) {
    if (witness) *witness = msg;
    return false;
  };
  for (int k = 0; k <= max_param; ++k) {
    for (const auto& sc : D.shapes()) {
      for (const auto& a : increasing_tuples(sc.arity, k)) {
        for (const auto& sd : D.shapes()) {
          for (const auto& b : increasing_tuples(sd.arity, k)) {
            Ord r = D.compare(sc.index, a, sd.index, b, k);
            if (D.compare(sd.index, b, sc.index, a, k) != flip(r))
              return fail("asymmetric result at " +
                          entry_key(sc.index, a, sd.index, b, k));
            if (sc.index == sd.index && a == b && r != Ord::Equal)
              return fail("reflexive pair not equal at " +
                          entry_key(sc.index, a, sd.index, b, k));
            // The verdict must survive every embedding into a larger
            // parameter: only the order pattern may matter.
            for (int k2 = k; k2 <= max_param; ++k2) {
              for (const auto& g : all_morphisms(k, k2)) {
                auto push = [&g](const std::vector<int>& v) {
                  std::vector<int> out;
                  for (int r2 : v)
                    out.push_back(
                        g.target.rank(g.apply(std::to_string(r2))));
                  return out;
                };
                if (D.compare(sc.index, push(a), sd.index, push(b), k2) != r)
                  return fail("order pattern incoherence at " +
                              entry_key(sc.index, a, sd.index, b, k) +
                              " under embedding into " + std::to_string(k2));
              }
            }
          }
        }
      }
    }
  }
  return true;
}

std::string denotation_system_to_json(const DenotationSystem& D,
                                      int max_param) {
  nlohmann::json j;
  j["name"] = D.name();
  j["max_param"] = max_param;
  j["shapes"] = nlohmann::json::array();
  for (const auto& s : D.shapes())
    j["shapes"].push_back({{"index", s.index}, {"arity", s.arity}});
  j["table"] = nlohmann::json::array();
  for (int k = 0; k <= max_param; ++k) {
    for (const auto& sc : D.shapes()) {
      for (const auto& a : increasing_tuples(sc.arity, k)) {
        for (const auto& sd : D.shapes()) {
          for (const auto& b : increasing_tuples(sd.arity, k)) {
            j["table"].push_back({{"c", sc.index},
                                  {"a", a},
                                  {"d", sd.index},
                                  {"b", b},
                                  {"param", k},
                                  {"ord", to_string(D.compare(sc.index, a,
                                                              sd.index, b,
                                                              k))}});
          }
        }
      }
    }
  }
  return j.dump(2);
}

std::shared_ptr<DenotationSystem> denotation_system_from_json(
    const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid denotation JSON: ") + e.what(), 0);
  }
  std::vector<DenotationShape> shapes;
  for (const auto& s : j.at("shapes"))
    shapes.push_back({s.at("index").get<std::string>(), s.at("arity").get<int>()});
  std::map<std::string, Ord> table;
  for (const auto& e : j.at("table")) {
    const std::string ord = e.at("ord").get<std::string>();
    Ord o = ord == "LT" ? Ord::Less : ord == "GT" ? Ord::Greater : Ord::Equal;
    table.emplace(entry_key(e.at("c").get<std::string>(),
                            e.at("a").get<std::vector<int>>(),
                            e.at("d").get<std::string>(),
                            e.at("b").get<std::vector<int>>(),
                            e.at("param").get<int>()),
                  o);
  }
  return std::make_shared<TableDenotationSystem>(
      j.at("name").get<std::string>(), std::move(shapes),
      j.at("max_param").get<int>(), std::move(table));
}

}  // namespace ordforge
