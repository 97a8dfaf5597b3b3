#include "ordforge/base_order.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace ordforge {

BaseOrder::BaseOrder(Kind k, int n, std::vector<std::string> labels)
    : kind_(k), n_(n), labels_(std::move(labels)) {
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (!rank_.emplace(labels_[i], i).second)
      throw ValidationError("duplicate label '" + labels_[i] + "' in explicit order");
  }
}

BaseOrder BaseOrder::finite(int n) {
  if (n < 0) throw ValidationError("finite order size must be >= 0");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return BaseOrder(Kind::Finite, n, std::move(labels));
}

BaseOrder BaseOrder::omega() { return BaseOrder(Kind::Omega, -1, {}); }

BaseOrder BaseOrder::explicit_order(std::vector<std::string> labels) {
  int n = static_cast<int>(labels.size());
  return BaseOrder(Kind::Explicit, n, std::move(labels));
}

int BaseOrder::size() const {
  if (kind_ == Kind::Omega)
    throw ValidationError("omega has no finite size");
  return n_;
}

bool BaseOrder::contains(const std::string& label) const {
  if (kind_ == Kind::Omega) {
    if (label.empty()) return false;
    return std::all_of(label.begin(), label.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  }
  return rank_.count(label) > 0;
}

int BaseOrder::rank(const std::string& label) const {
  if (kind_ == Kind::Omega) {
    if (!contains(label))
      throw ValidationError("'" + label + "' is not an element of omega");
    return std::stoi(label);
  }
  auto it = rank_.find(label);
  if (it == rank_.end())
    throw ValidationError("'" + label + "' is not an element of " + to_text());
  return it->second;
}

std::string BaseOrder::label_at(int r) const {
  if (kind_ == Kind::Omega) return std::to_string(r);
  if (r < 0 || r >= n_)
    throw ValidationError("rank out of range");
  return labels_[r];
}

Ord BaseOrder::compare(const std::string& a, const std::string& b) const {
  int ra = rank(a), rb = rank(b);
  if (ra < rb) return Ord::Less;
  if (ra > rb) return Ord::Greater;
  return Ord::Equal;
}

std::vector<std::string> BaseOrder::elements(int omega_bound) const {
  if (kind_ == Kind::Omega) {
    std::vector<std::string> out;
    for (int i = 0; i < omega_bound; ++i) out.push_back(std::to_string(i));
    return out;
  }
  return labels_;
}

std::string BaseOrder::to_text() const {
  switch (kind_) {
    case Kind::Finite: return "fin:" + std::to_string(n_);
    case Kind::Omega: return "omega";
    default: {
      std::string out = "list:[";
      for (size_t i = 0; i < labels_.size(); ++i) {
        if (i) out += ",";
        out += labels_[i];
      }
      return out + "]";
    }
  }
}

BaseOrder BaseOrder::parse(const std::string& text) {
  if (text == "omega") return omega();
  if (text.rfind("fin:", 0) == 0) {
    try {
      return finite(std::stoi(text.substr(4)));
    } catch (const std::exception&) {
      throw ValidationError("bad finite order spec '" + text + "'");
    }
  }
  if (text.rfind("list:[", 0) == 0 && text.back() == ']') {
    std::string body = text.substr(6, text.size() - 7);
    std::vector<std::string> labels;
    if (!body.empty()) {
      size_t pos = 0;
      while (true) {
        size_t comma = body.find(',', pos);
        if (comma == std::string::npos) {
          labels.push_back(body.substr(pos));
          break;
        }
        labels.push_back(body.substr(pos, comma - pos));
        pos = comma + 1;
      }
    }
    return explicit_order(std::move(labels));
  }
  throw ValidationError("unrecognized base order spec '" + text + "'");
}

bool BaseOrder::operator==(const BaseOrder& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Omega) return true;
  return labels_ == other.labels_;
}

std::string OrderMorphism::apply(const std::string& src_label) const {
  for (const auto& [a, b] : map)
    if (a == src_label) return b;
  throw ValidationError("morphism map not defined on '" + src_label + "'");
}

std::string OrderMorphism::to_json() const {
  nlohmann::json j;
  j["src"] = source.to_text();
  j["tgt"] = target.to_text();
  j["map"] = nlohmann::json::array();
  for (const auto& [a, b] : map) j["map"].push_back({a, b});
  return j.dump();
}

OrderMorphism OrderMorphism::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  OrderMorphism f{BaseOrder::parse(j.at("src").get<std::string>()),
                  BaseOrder::parse(j.at("tgt").get<std::string>()),
                  {}};
  for (const auto& pair : j.at("map"))
    f.map.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
  return f;
}

OrderMorphism identity_morphism(const BaseOrder& x) {
  OrderMorphism f{x, x, {}};
  for (const auto& e : x.elements()) f.map.emplace_back(e, e);
  return f;
}

OrderMorphism compose(const OrderMorphism& g, const OrderMorphism& f) {
  if (!(f.target == g.source))
    throw ValidationError("composition mismatch: f's target differs from g's source");
  OrderMorphism h{f.source, g.target, {}};
  for (const auto& [a, b] : f.map) h.map.emplace_back(a, g.apply(b));
  return h;
}

bool check_morphism(const OrderMorphism& f) {
  if (!f.source.is_enumerable())
    throw ValidationError("morphism source must be enumerable");
  auto elems = f.source.elements();
  std::vector<std::string> images;
  for (const auto& e : elems) images.push_back(f.apply(e));  // throws if not total
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (f.target.compare(images[i], images[j]) != Ord::Less) return false;
  return true;
}

std::pair<BaseOrder, OrderMorphism> pullback(const OrderMorphism& f,
                                             const OrderMorphism& g) {
  if (!(f.target == g.target))
    throw ValidationError("pullback requires a shared target");
  std::set<int> ran_f, ran_g;
  for (const auto& [a, b] : f.map) ran_f.insert(f.target.rank(b));
  for (const auto& [a, b] : g.map) ran_g.insert(g.target.rank(b));
  std::vector<int> both;
  std::set_intersection(ran_f.begin(), ran_f.end(), ran_g.begin(), ran_g.end(),
                        std::back_inserter(both));
  BaseOrder d = BaseOrder::finite(static_cast<int>(both.size()));
  OrderMorphism h{d, f.target, {}};
  for (size_t i = 0; i < both.size(); ++i)
    h.map.emplace_back(std::to_string(i), f.target.label_at(both[i]));
  return {d, h};
}

std::vector<OrderMorphism> all_morphisms(int m, int n) {
  return all_morphisms(BaseOrder::finite(m), BaseOrder::finite(n));
}

std::vector<OrderMorphism> all_morphisms(const BaseOrder& src,
                                         const BaseOrder& tgt) {
  auto se = src.elements();
  auto te = tgt.elements();
  int m = static_cast<int>(se.size());
  int n = static_cast<int>(te.size());
  std::vector<OrderMorphism> out;
  if (m > n) return out;
  // choose an increasing m-subset of the n target positions
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    OrderMorphism f{src, tgt, {}};
    for (int i = 0; i < m; ++i) f.map.emplace_back(se[i], te[idx[i]]);
    out.push_back(std::move(f));
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace ordforge
