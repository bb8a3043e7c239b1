#include "hocalc/theta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hocalc/error.hpp"

namespace hocalc {

ThetaShape::ThetaShape(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 1) throw ValidationError("shape entries must be >= 1, got " + str());
  }
}

int ThetaShape::degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int ThetaShape::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

ThetaShape ThetaShape::hat() const {
  if (entries_.empty()) throw ValidationError("the point has no faces");
  return ThetaShape(std::vector<int>(entries_.begin(), entries_.end() - 1));
}

ThetaShape ThetaShape::prefix(int i) const {
  return ThetaShape(std::vector<int>(entries_.begin(), entries_.begin() + i));
}

void ThetaShape::validate(int n) const {
  if (length() > n) {
    throw ValidationError("shape " + str() + " is longer than n=" + std::to_string(n));
  }
}

std::string ThetaShape::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

bool shape_order_less(const ThetaShape& a, const ThetaShape& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.length() != b.length()) return a.length() < b.length();
  return a.entries() < b.entries();
}

MonotoneMap::MonotoneMap(int target_size, std::vector<int> values)
    : target_(target_size), values_(std::move(values)) {
  if (values_.empty()) throw ValidationError("monotone map needs at least one value");
  if (target_ < 0) throw ValidationError("negative target size");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > target_) {
      throw ValidationError("monotone map value out of range");
    }
    if (i > 0 && values_[i] < values_[i - 1]) {
      throw ValidationError("component is not monotone");
    }
  }
}

MonotoneMap MonotoneMap::constant(int source_size, int target_size, int value) {
  return MonotoneMap(target_size, std::vector<int>(source_size + 1, value));
}

MonotoneMap MonotoneMap::identity(int size) {
  std::vector<int> v(size + 1);
  std::iota(v.begin(), v.end(), 0);
  return MonotoneMap(size, std::move(v));
}

bool MonotoneMap::is_constant() const { return values_.front() == values_.back(); }

bool MonotoneMap::is_surjective() const {
  if (values_.front() != 0 || values_.back() != target_) return false;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] - values_[i - 1] > 1) return false;
  }
  return true;
}

MonotoneMap then(const MonotoneMap& first, const MonotoneMap& second) {
  if (first.target_size() != second.source_size()) {
    throw ValidationError("monotone maps are not composable");
  }
  std::vector<int> v(first.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = second(first(static_cast<int>(i)));
  return MonotoneMap(second.target_size(), std::move(v));
}

std::vector<MonotoneMap> all_monotone_maps(int a, int b) {
  std::vector<MonotoneMap> out;
  std::vector<int> v(a + 1, 0);
  while (true) {
    out.emplace_back(b, v);
    // Next nondecreasing sequence in lexicographic order.
    int i = a;
    while (i >= 0 && v[i] == b) --i;
    if (i < 0) break;
    ++v[i];
    for (int j = i + 1; j <= a; ++j) v[j] = v[i];
  }
  return out;
}

std::string ThetaMorphism::str() const {
  std::ostringstream os;
  os << source.str() << "->" << target.str() << "[";
  for (std::size_t i = 0; i < components.size(); ++i) {
    os << (i ? ";" : "");
    const auto& vals = components[i].values();
    for (std::size_t j = 0; j < vals.size(); ++j) os << vals[j];
  }
  os << "]";
  return os.str();
}

bool morphism_less(const ThetaMorphism& a, const ThetaMorphism& b) {
  const auto n = std::min(a.components.size(), b.components.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.components[i].values() != b.components[i].values()) {
      return a.components[i].values() < b.components[i].values();
    }
  }
  if (a.components.size() != b.components.size()) {
    return a.components.size() < b.components.size();
  }
  if (a.source != b.source) return shape_order_less(a.source, b.source);
  return shape_order_less(a.target, b.target);
}

void validate_morphism(const ThetaMorphism& a) {
  const int k = a.target.length();
  const int s = a.length();
  if (s > k) throw ValidationError("morphism longer than its target: " + a.str());
  if (k > 0 && s == 0) throw ValidationError("empty morphism into a non-point: " + a.str());
  for (int i = 0; i < s; ++i) {
    const auto& c = a.components[i];
    if (c.source_size() != a.source.padded(i) || c.target_size() != a.target.padded(i)) {
      throw ValidationError("component size mismatch in " + a.str());
    }
    if (c.is_constant() && i != s - 1) {
      throw ValidationError("constant component before the end in " + a.str());
    }
  }
  if (s > 0 && s < k && !a.components.back().is_constant()) {
    throw ValidationError("truncated morphism must end with a constant: " + a.str());
  }
}

ThetaMorphism canonicalize(const ThetaShape& source, const ThetaShape& target,
                           std::span<const MonotoneMap> raw) {
  const int n = static_cast<int>(raw.size());
  source.validate(n);
  target.validate(n);
  for (int i = 0; i < n; ++i) {
    if (raw[i].source_size() != source.padded(i) || raw[i].target_size() != target.padded(i)) {
      throw ValidationError("raw component " + std::to_string(i) +
                            " does not match the padded shapes");
    }
  }
  ThetaMorphism out{source, target, {}};
  for (int i = 0; i < target.length(); ++i) {
    out.components.push_back(raw[i]);
    if (raw[i].is_constant()) break;
  }
  return out;
}

ThetaMorphism identity(const ThetaShape& m) {
  ThetaMorphism out{m, m, {}};
  for (int e : m.entries()) out.components.push_back(MonotoneMap::identity(e));
  return out;
}

namespace {

void extend_hom(const ThetaShape& n, const ThetaShape& m, ThetaMorphism& partial,
                std::vector<ThetaMorphism>& out) {
  const int i = partial.length();
  for (auto& c : all_monotone_maps(n.padded(i), m.padded(i))) {
    const bool stop = c.is_constant() || i + 1 == m.length();
    partial.components.push_back(std::move(c));
    if (stop) {
      out.push_back(partial);
    } else {
      extend_hom(n, m, partial, out);
    }
    partial.components.pop_back();
  }
}

}  // namespace

std::vector<ThetaMorphism> hom_set(const ThetaShape& n, const ThetaShape& m) {
  std::vector<ThetaMorphism> out;
  ThetaMorphism partial{n, m, {}};
  if (m.is_point()) {
    out.push_back(partial);
    return out;
  }
  extend_hom(n, m, partial, out);
  return out;
}

ThetaMorphism compose(const ThetaMorphism& g, const ThetaMorphism& f) {
  if (g.target != f.source) {
    throw ValidationError("cannot compose " + g.str() + " with " + f.str());
  }
  ThetaMorphism out{g.source, f.target, {}};
  for (int i = 0; i < f.length(); ++i) {
    // Past g's canonical length the middle object is zero-padded, so the
    // missing component of g is the map into [0] and f's component there is
    // constant; the composite stops at this position.
    MonotoneMap gi = i < g.length() ? g.components[i]
                                    : MonotoneMap::constant(g.source.padded(i), 0, 0);
    auto c = then(gi, f.components[i]);
    const bool stop = c.is_constant();
    out.components.push_back(std::move(c));
    if (stop) break;
  }
  return out;
}

std::vector<ThetaMorphism> faces(const ThetaShape& m) {
  if (m.is_point()) throw ValidationError("the point has no faces");
  const ThetaShape h = m.hat();
  std::vector<ThetaMorphism> out;
  for (int v = 0; v <= m.last(); ++v) {
    ThetaMorphism a = identity(h);
    a.target = m;
    a.components.push_back(MonotoneMap::constant(0, m.last(), v));
    out.push_back(std::move(a));
  }
  return out;
}

bool in_boundary(const ThetaMorphism& a) {
  const int k = a.target.length();
  if (k == 0) return false;
  return a.length() < k || a.components.back().is_constant();
}

std::vector<ThetaShape> enumerate_shapes(int n, int degree_bound) {
  if (n < 1 || degree_bound < 1) throw ValidationError("enumerate_shapes needs n, d >= 1");
  std::vector<ThetaShape> out{ThetaShape::point()};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= n; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& p : layer) {
      for (int e = 1; e <= degree_bound; ++e) {
        auto q = p;
        q.push_back(e);
        next.push_back(q);
        out.emplace_back(q);
      }
    }
    layer = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), shape_order_less);
  return out;
}

}  // namespace hocalc
