#include "hocalc/support.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hocalc/error.hpp"

namespace hocalc {

namespace {

constexpr std::size_t kMaxHomElements = 400000;

}  // namespace

std::vector<int> morphism_key(const ThetaMorphism& a) {
  std::vector<int> key;
  for (const auto& c : a.components) {
    key.push_back(-1);
    key.insert(key.end(), c.values().begin(), c.values().end());
  }
  return key;
}

std::shared_ptr<const ThetaSupport> ThetaSupport::make(int n, int degree_bound) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const ThetaSupport>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, degree_bound}];
  if (!slot) slot = std::make_shared<const ThetaSupport>(n, degree_bound);
  return slot;
}

ThetaSupport::ThetaSupport(int n, int degree_bound)
    : n_(n), d_(degree_bound), shapes_(enumerate_shapes(n, degree_bound)) {
  for (ShapeId s = 0; s < shapes_.size(); ++s) shape_index_[shapes_[s].entries()] = s;
  const std::size_t s = shapes_.size();
  homs_.resize(s * s);
  hom_index_.resize(s * s);
  std::size_t total = 0;
  for (ShapeId a = 0; a < s; ++a) {
    for (ShapeId b = 0; b < s; ++b) {
      auto& h = homs_[pair(a, b)];
      h = hom_set(shapes_[a], shapes_[b]);
      total += h.size();
      if (total > kMaxHomElements) {
        throw BoundError("Theta support n=" + std::to_string(n) + " d=" +
                         std::to_string(degree_bound) + " is too large");
      }
      for (MorId i = 0; i < h.size(); ++i) hom_index_[pair(a, b)][morphism_key(h[i])] = i;
    }
  }
  for (ShapeId a = 0; a < s; ++a) identities_.push_back(find_morphism(hocalc::identity(shapes_[a])));
  tables_.resize(s * s * s);
  table_once_ = std::make_unique<std::once_flag[]>(s * s * s);
}

std::optional<ShapeId> ThetaSupport::find(const ThetaShape& m) const {
  auto it = shape_index_.find(m.entries());
  if (it == shape_index_.end()) return std::nullopt;
  return it->second;
}

ShapeId ThetaSupport::id(const ThetaShape& m) const {
  auto s = find(m);
  if (!s) {
    throw ValidationError("shape " + m.str() + " is outside the support n=" + std::to_string(n_) +
                          " d=" + std::to_string(d_));
  }
  return *s;
}

MorId ThetaSupport::find_morphism(const ThetaMorphism& a) const {
  const auto& idx = hom_index_[pair(id(a.source), id(a.target))];
  auto it = idx.find(morphism_key(a));
  if (it == idx.end()) throw ValidationError("not a canonical morphism: " + a.str());
  return it->second;
}

const std::vector<MorId>& ThetaSupport::table(ShapeId n, ShapeId p, ShapeId m) const {
  const std::size_t slot = (n * size() + p) * size() + m;
  std::call_once(table_once_[slot], [&] {
    const auto& gs = hom(n, p);
    const auto& fs = hom(p, m);
    auto& t = tables_[slot];
    t.resize(gs.size() * fs.size());
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
      for (std::size_t fi = 0; fi < fs.size(); ++fi) {
        auto c = hocalc::compose(gs[gi], fs[fi]);
        t[gi * fs.size() + fi] = hom_index_[pair(n, m)].at(morphism_key(c));
      }
    }
  });
  return tables_[slot];
}

MorId ThetaSupport::compose(ShapeId n, ShapeId p, ShapeId m, MorId g, MorId f) const {
  return table(n, p, m)[g * hom(p, m).size() + f];
}

const char* to_string(BoundaryMode mode) {
  return mode == BoundaryMode::free ? "free" : "full-n1-experimental";
}

BoundaryMode boundary_mode_from_string(const std::string& s) {
  if (s == "free") return BoundaryMode::free;
  if (s == "full" || s == "full-n1-experimental") return BoundaryMode::full;
  throw ValidationError("unknown boundary mode '" + s + "'");
}

std::shared_ptr<const BoundaryStructure> BoundaryStructure::make(
    std::shared_ptr<const ThetaSupport> support, BoundaryMode mode) {
  static std::mutex mu;
  static std::map<std::tuple<const ThetaSupport*, int>, std::shared_ptr<const BoundaryStructure>>
      cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{support.get(), static_cast<int>(mode)}];
  if (!slot) slot = std::make_shared<const BoundaryStructure>(std::move(support), mode);
  return slot;
}

std::shared_ptr<const BoundaryStructure> BoundaryStructure::make(int n, int degree_bound,
                                                                 BoundaryMode mode) {
  return make(ThetaSupport::make(n, degree_bound), mode);
}

namespace {

// d_j : [m-1] -> [m] skipping j, as a Theta^1 morphism.
ThetaMorphism coface(int m, int j) {
  const ThetaShape src = m == 1 ? ThetaShape::point() : ThetaShape({m - 1});
  std::vector<int> v;
  for (int t = 0; t <= m - 1; ++t) v.push_back(t < j ? t : t + 1);
  return ThetaMorphism{src, ThetaShape({m}), {MonotoneMap(m, v)}};
}

}  // namespace

BoundaryStructure::BoundaryStructure(std::shared_ptr<const ThetaSupport> support,
                                     BoundaryMode mode)
    : support_(std::move(support)), mode_(mode) {
  const auto& sup = *support_;
  if (mode_ == BoundaryMode::full && sup.n() != 1) {
    throw ValidationError("boundary mode 'full' is only available at n = 1");
  }
  const std::size_t s = sup.size();
  face_source_.resize(s);
  faces_.resize(s);
  interior_.resize(s * s);
  interior_pos_.resize(s * s);
  factor_.resize(s * s);
  overlaps_.resize(s);

  for (ShapeId m = 0; m < s; ++m) {
    const auto& shape = sup.shape(m);
    if (shape.is_point()) continue;
    if (mode_ == BoundaryMode::free) {
      face_source_[m] = sup.id(shape.hat());
      for (const auto& f : hocalc::faces(shape)) faces_[m].push_back(sup.find_morphism(f));
    } else {
      const int k = shape.last();
      face_source_[m] = k == 1 ? sup.point() : sup.id(ThetaShape({k - 1}));
      for (int j = 0; j <= k; ++j) faces_[m].push_back(sup.find_morphism(coface(k, j)));
    }
  }

  for (ShapeId n = 0; n < s; ++n) {
    for (ShapeId m = 0; m < s; ++m) {
      const auto& h = sup.hom(n, m);
      auto& pos = interior_pos_[pair(n, m)];
      auto& fac = factor_[pair(n, m)];
      pos.assign(h.size(), -1);
      fac.assign(h.size(), FaceFactor{0, 0});
      const auto& shape = sup.shape(m);
      for (MorId a = 0; a < h.size(); ++a) {
        bool boundary = false;
        if (!shape.is_point()) {
          if (mode_ == BoundaryMode::free) {
            boundary = hocalc::in_boundary(h[a]);
            if (boundary) {
              ThetaMorphism through = h[a];
              through.target = shape.hat();
              std::uint32_t face = 0;
              if (h[a].length() == shape.length()) {
                face = static_cast<std::uint32_t>(through.components.back()(0));
                through.components.pop_back();
              }
              fac[a] = FaceFactor{face, sup.find_morphism(through)};
            }
          } else {
            const auto& phi = h[a].components.front();
            boundary = !phi.is_surjective();
            if (boundary) {
              const int k = shape.last();
              int j = 0;
              const auto& vals = phi.values();
              while (std::find(vals.begin(), vals.end(), j) != vals.end()) ++j;
              ThetaMorphism through{sup.shape(n), *face_source_[m] == sup.point()
                                                      ? ThetaShape::point()
                                                      : ThetaShape({k - 1}),
                                    {}};
              if (k > 1) {
                std::vector<int> v;
                for (int x : vals) v.push_back(x < j ? x : x - 1);
                through.components.emplace_back(k - 1, v);
              }
              fac[a] = FaceFactor{static_cast<std::uint32_t>(j), sup.find_morphism(through)};
            }
          }
        }
        if (!boundary) {
          pos[a] = static_cast<int>(interior_[pair(n, m)].size());
          interior_[pair(n, m)].push_back(a);
        }
      }
    }
  }

  for (ShapeId m = 0; m < s; ++m) {
    if (!face_source_[m]) continue;
    const ShapeId f = *face_source_[m];
    const auto& fs = faces_[m];
    for (ShapeId n = 0; n < s; ++n) {
      const auto& h = sup.hom(n, f);
      for (std::uint32_t i = 0; i < fs.size(); ++i) {
        for (std::uint32_t j = i + 1; j < fs.size(); ++j) {
          for (MorId b = 0; b < h.size(); ++b) {
            const MorId left = sup.compose(n, f, m, b, fs[i]);
            for (MorId c = 0; c < h.size(); ++c) {
              if (sup.compose(n, f, m, c, fs[j]) == left) {
                overlaps_[m].push_back(Overlap{i, j, n, b, c});
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace hocalc
