#include "hocalc/category.hpp"

#include "hocalc/error.hpp"

namespace hocalc {

std::uint32_t FiniteCategory::add_object(std::string obj) {
  if (find_object(obj)) throw ValidationError("duplicate object '" + obj + "'");
  const auto x = static_cast<std::uint32_t>(objects_.size());
  objects_.push_back(obj);
  identities_.push_back(kNone);
  const auto id = add_arrow("id_" + obj, x, x);
  identities_[x] = id;
  set_composite(id, id, id);
  return x;
}

std::uint32_t FiniteCategory::add_arrow(std::string arrow_name, std::uint32_t src,
                                        std::uint32_t dst) {
  if (src >= objects_.size() || dst >= objects_.size()) {
    throw ValidationError("arrow '" + arrow_name + "' has an unknown endpoint");
  }
  if (find_arrow(arrow_name)) throw ValidationError("duplicate arrow '" + arrow_name + "'");
  const auto a = static_cast<std::uint32_t>(arrows_.size());
  arrows_.push_back(Arrow{std::move(arrow_name), src, dst});
  for (auto& row : table_) row.push_back(kNone);
  table_.emplace_back(arrows_.size(), kNone);
  // Identity composites are implicit.
  if (identities_[src] != kNone) set_composite(identities_[src], a, a);
  if (identities_[dst] != kNone) set_composite(a, identities_[dst], a);
  return a;
}

void FiniteCategory::set_composite(std::uint32_t first, std::uint32_t second,
                                   std::uint32_t result) {
  if (first >= arrows_.size() || second >= arrows_.size() || result >= arrows_.size()) {
    throw ValidationError("composite refers to an unknown arrow");
  }
  if (arrows_[first].dst != arrows_[second].src) {
    throw ValidationError("arrows '" + arrows_[first].name + "' and '" + arrows_[second].name +
                          "' are not composable");
  }
  if (arrows_[result].src != arrows_[first].src || arrows_[result].dst != arrows_[second].dst) {
    throw ValidationError("composite of '" + arrows_[first].name + "' then '" +
                          arrows_[second].name + "' has the wrong endpoints");
  }
  table_[first][second] = result;
}

std::uint32_t FiniteCategory::compose(std::uint32_t first, std::uint32_t second) const {
  const auto r = table_[first][second];
  if (r == kNone) {
    throw ValidationError("missing composite of '" + arrows_[first].name + "' then '" +
                          arrows_[second].name + "'");
  }
  return r;
}

std::optional<std::uint32_t> FiniteCategory::find_object(const std::string& obj) const {
  for (std::uint32_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == obj) return i;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> FiniteCategory::find_arrow(const std::string& arrow_name) const {
  for (std::uint32_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == arrow_name) return i;
  }
  return std::nullopt;
}

void FiniteCategory::validate() const {
  const auto n = static_cast<std::uint32_t>(arrows_.size());
  for (std::uint32_t f = 0; f < n; ++f) {
    for (std::uint32_t g = 0; g < n; ++g) {
      if (arrows_[f].dst == arrows_[g].src) compose(f, g);
    }
  }
  for (std::uint32_t f = 0; f < n; ++f) {
    if (compose(identities_[arrows_[f].src], f) != f || compose(f, identities_[arrows_[f].dst]) != f) {
      throw ValidationError("identity law fails for '" + arrows_[f].name + "'");
    }
    for (std::uint32_t g = 0; g < n; ++g) {
      if (arrows_[f].dst != arrows_[g].src) continue;
      for (std::uint32_t h = 0; h < n; ++h) {
        if (arrows_[g].dst != arrows_[h].src) continue;
        if (compose(compose(f, g), h) != compose(f, compose(g, h))) {
          throw ValidationError("associativity fails for '" + arrows_[f].name + "', '" +
                                arrows_[g].name + "', '" + arrows_[h].name + "'");
        }
      }
    }
  }
}

}  // namespace hocalc
