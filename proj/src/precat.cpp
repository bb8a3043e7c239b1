#include "hocalc/precat.hpp"

#include <map>
#include <sstream>

#include "hocalc/error.hpp"

namespace hocalc {

Precat::Precat(std::shared_ptr<const ThetaSupport> support) : support_(std::move(support)) {
  const std::size_t s = support_->size();
  labels_.resize(s);
  tables_.resize(s * s);
  for (ShapeId n = 0; n < s; ++n) {
    for (ShapeId m = 0; m < s; ++m) tables_[n * s + m].resize(support_->hom(n, m).size());
  }
}

std::vector<std::size_t> Precat::level_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : labels_) out.push_back(l.size());
  return out;
}

Elem Precat::add_element(ShapeId level, std::string label) {
  const std::size_t s = support_->size();
  const Elem id = static_cast<Elem>(labels_[level].size());
  labels_[level].push_back(std::move(label));
  for (ShapeId n = 0; n < s; ++n) {
    for (auto& t : tables_[n * s + level]) t.push_back(kUnset);
  }
  return id;
}

std::vector<Elem> Precat::vertices(ShapeId m, Elem x) const {
  const auto& sup = *support_;
  std::vector<Elem> out;
  const auto count = sup.hom(sup.point(), m).size();
  for (MorId v = 0; v < count; ++v) out.push_back(restrict(sup.point(), m, v, x));
  return out;
}

std::optional<std::string> Precat::check() const {
  const auto& sup = *support_;
  const std::size_t s = sup.size();
  for (ShapeId n = 0; n < s; ++n) {
    for (ShapeId m = 0; m < s; ++m) {
      for (MorId a = 0; a < sup.hom(n, m).size(); ++a) {
        const auto& t = tables_[n * s + m][a];
        for (Elem x = 0; x < t.size(); ++x) {
          if (t[x] == kUnset || t[x] >= size(n)) {
            return "restriction of element " + std::to_string(x) + " along " +
                   sup.hom(n, m)[a].str() + " is unset or out of range";
          }
        }
      }
    }
  }
  for (ShapeId m = 0; m < s; ++m) {
    const auto& t = tables_[m * s + m][sup.identity(m)];
    for (Elem x = 0; x < t.size(); ++x) {
      if (t[x] != x) return "identity restriction moves an element at " + sup.shape(m).str();
    }
  }
  for (ShapeId n = 0; n < s; ++n) {
    for (ShapeId p = 0; p < s; ++p) {
      for (ShapeId m = 0; m < s; ++m) {
        for (MorId g = 0; g < sup.hom(n, p).size(); ++g) {
          for (MorId f = 0; f < sup.hom(p, m).size(); ++f) {
            const MorId fg = sup.compose(n, p, m, g, f);
            for (Elem x = 0; x < size(m); ++x) {
              if (restrict(n, p, g, restrict(p, m, f, x)) != restrict(n, m, fg, x)) {
                std::ostringstream os;
                os << "functoriality fails for element " << x << " of " << sup.shape(m).str()
                   << " along " << sup.hom(n, p)[g].str() << " then "
                   << sup.hom(p, m)[f].str();
                return os.str();
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_natural(const Precat& source, const Precat& target,
                                         const PrecatMap& f) {
  if (source.support_ptr() != target.support_ptr()) return "supports differ";
  const auto& sup = source.support();
  const std::size_t s = sup.size();
  if (f.levels.size() != s) return "map has the wrong number of levels";
  for (ShapeId m = 0; m < s; ++m) {
    if (f.levels[m].size() != source.size(m)) return "map level " + sup.shape(m).str() + " has wrong size";
    for (Elem y : f.levels[m]) {
      if (y >= target.size(m)) return "map image out of range at " + sup.shape(m).str();
    }
  }
  for (ShapeId n = 0; n < s; ++n) {
    for (ShapeId m = 0; m < s; ++m) {
      for (MorId a = 0; a < sup.hom(n, m).size(); ++a) {
        for (Elem x = 0; x < source.size(m); ++x) {
          if (f(n, source.restrict(n, m, a, x)) != target.restrict(n, m, a, f(m, x))) {
            return "naturality fails at element " + std::to_string(x) + " of " +
                   sup.shape(m).str() + " along " + sup.hom(n, m)[a].str();
          }
        }
      }
    }
  }
  return std::nullopt;
}

PrecatMap identity_map(const Precat& x) {
  PrecatMap out;
  for (ShapeId m = 0; m < x.support().size(); ++m) {
    auto& l = out.levels.emplace_back(x.size(m));
    for (Elem e = 0; e < l.size(); ++e) l[e] = e;
  }
  return out;
}

PrecatMap then(const PrecatMap& first, const PrecatMap& second) {
  PrecatMap out;
  out.levels.resize(first.levels.size());
  for (std::size_t m = 0; m < first.levels.size(); ++m) {
    for (Elem y : first.levels[m]) out.levels[m].push_back(second.levels[m][y]);
  }
  return out;
}

bool is_levelwise_bijective(const Precat& source, const Precat& target, const PrecatMap& f) {
  for (ShapeId m = 0; m < source.support().size(); ++m) {
    if (source.size(m) != target.size(m)) return false;
    std::vector<bool> hit(target.size(m), false);
    for (Elem y : f.levels[m]) {
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

Precat representable(std::shared_ptr<const ThetaSupport> support, const ThetaShape& shape) {
  const auto& sup = *support;
  const ShapeId m = sup.id(shape);
  Precat x(support);
  const std::size_t s = sup.size();
  for (ShapeId n = 0; n < s; ++n) {
    for (const auto& a : sup.hom(n, m)) x.add_element(n, a.str());
  }
  for (ShapeId n = 0; n < s; ++n) {
    for (ShapeId p = 0; p < s; ++p) {
      for (MorId g = 0; g < sup.hom(n, p).size(); ++g) {
        for (MorId a = 0; a < sup.hom(p, m).size(); ++a) {
          x.set_restriction(n, p, g, a, sup.compose(n, p, m, g, a));
        }
      }
    }
  }
  return x;
}

BoundaryPresheaf boundary(std::shared_ptr<const ThetaSupport> support, const ThetaShape& shape) {
  const auto& sup = *support;
  const ShapeId m = sup.id(shape);
  const std::size_t s = sup.size();
  BoundaryPresheaf out{Precat(support), {}};
  out.inclusion.levels.resize(s);
  // position of each boundary morphism in its level
  std::vector<std::vector<Elem>> pos(s);
  for (ShapeId n = 0; n < s; ++n) {
    const auto& h = sup.hom(n, m);
    pos[n].assign(h.size(), Precat::kUnset);
    for (MorId a = 0; a < h.size(); ++a) {
      if (in_boundary(h[a])) {
        pos[n][a] = out.object.add_element(n, h[a].str());
        out.inclusion.levels[n].push_back(a);
      }
    }
  }
  for (ShapeId n = 0; n < s; ++n) {
    for (ShapeId p = 0; p < s; ++p) {
      for (MorId g = 0; g < sup.hom(n, p).size(); ++g) {
        for (MorId a : out.inclusion.levels[p]) {
          const MorId b = sup.compose(n, p, m, g, a);
          if (pos[n][b] == Precat::kUnset) {
            throw std::logic_error("boundary of " + shape.str() + " is not closed under restriction");
          }
          out.object.set_restriction(n, p, g, pos[p][a], pos[n][b]);
        }
      }
    }
  }
  return out;
}

Precat terminal(std::shared_ptr<const ThetaSupport> support) {
  return representable(std::move(support), ThetaShape::point());
}

Pullback pullback(const Precat& x, const Precat& y, const PrecatMap& f, const PrecatMap& g) {
  if (x.support_ptr() != y.support_ptr()) throw ValidationError("pullback across supports");
  const auto& sup = x.support();
  const std::size_t s = sup.size();
  Pullback out{Precat(x.support_ptr()), {}, {}};
  out.first.levels.resize(s);
  out.second.levels.resize(s);
  // index of each pair at each level
  std::vector<std::map<std::pair<Elem, Elem>, Elem>> index(s);
  for (ShapeId m = 0; m < s; ++m) {
    std::map<Elem, std::vector<Elem>> over;
    for (Elem b = 0; b < y.size(m); ++b) over[g(m, b)].push_back(b);
    for (Elem a = 0; a < x.size(m); ++a) {
      auto it = over.find(f(m, a));
      if (it == over.end()) continue;
      for (Elem b : it->second) {
        const Elem e = out.object.add_element(m, "(" + x.label(m, a) + "," + y.label(m, b) + ")");
        index[m][{a, b}] = e;
        out.first.levels[m].push_back(a);
        out.second.levels[m].push_back(b);
      }
    }
  }
  for (ShapeId n = 0; n < s; ++n) {
    for (ShapeId m = 0; m < s; ++m) {
      for (MorId a = 0; a < sup.hom(n, m).size(); ++a) {
        for (Elem e = 0; e < out.object.size(m); ++e) {
          const Elem u = x.restrict(n, m, a, out.first.levels[m][e]);
          const Elem v = y.restrict(n, m, a, out.second.levels[m][e]);
          out.object.set_restriction(n, m, a, e, index[n].at({u, v}));
        }
      }
    }
  }
  return out;
}

}  // namespace hocalc
