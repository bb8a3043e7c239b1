#include "hocalc/nerve.hpp"

#include <map>

#include "hocalc/error.hpp"

namespace hocalc {

namespace {

struct NerveLevel {
  std::vector<std::vector<std::uint32_t>> strings;  // level 0: {object}
  std::map<std::vector<std::uint32_t>, Elem> index;
};

std::vector<std::uint32_t> vertices_of(const FiniteCategory& c, int m,
                                       const std::vector<std::uint32_t>& s) {
  if (m == 0) return {s[0]};
  std::vector<std::uint32_t> v{c.arrow(s[0]).src};
  for (auto a : s) v.push_back(c.arrow(a).dst);
  return v;
}

}  // namespace

Precat nerve(const FiniteCategory& c, int degree_bound) {
  c.validate();
  auto support = ThetaSupport::make(1, degree_bound);
  const auto& sup = *support;
  Precat x(support);
  // shape (m) has id m in the n = 1 support
  std::vector<NerveLevel> levels(sup.size());
  for (std::uint32_t o = 0; o < c.object_count(); ++o) {
    levels[0].index[{o}] = x.add_element(0, c.object_name(o));
    levels[0].strings.push_back({o});
  }
  for (int m = 1; m <= degree_bound; ++m) {
    std::vector<std::vector<std::uint32_t>> strings;
    for (std::uint32_t a = 0; a < c.arrow_count(); ++a) strings.push_back({a});
    for (int len = 2; len <= m; ++len) {
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& s : strings) {
        for (std::uint32_t a = 0; a < c.arrow_count(); ++a) {
          if (c.arrow(s.back()).dst != c.arrow(a).src) continue;
          auto t = s;
          t.push_back(a);
          next.push_back(std::move(t));
        }
      }
      strings = std::move(next);
    }
    for (const auto& s : strings) {
      std::string label;
      for (std::size_t i = 0; i < s.size(); ++i) label += (i ? "|" : "") + c.arrow(s[i]).name;
      levels[m].index[s] = x.add_element(m, label);
      levels[m].strings.push_back(s);
    }
  }
  for (ShapeId n = 0; n < sup.size(); ++n) {
    const int k = sup.shape(n).padded(0);
    for (ShapeId m = 0; m < sup.size(); ++m) {
      const int mm = sup.shape(m).padded(0);
      const auto& h = sup.hom(n, m);
      for (MorId a = 0; a < h.size(); ++a) {
        const MonotoneMap phi =
            h[a].components.empty() ? MonotoneMap::constant(k, 0, 0) : h[a].components[0];
        for (Elem e = 0; e < levels[m].strings.size(); ++e) {
          const auto& s = levels[m].strings[e];
          const auto verts = vertices_of(c, mm, s);
          std::vector<std::uint32_t> t;
          if (k == 0) {
            t.push_back(verts[phi(0)]);
          } else {
            for (int j = 1; j <= k; ++j) {
              std::uint32_t arrow = c.identity(verts[phi(j - 1)]);
              for (int i = phi(j - 1); i < phi(j); ++i) arrow = c.compose(arrow, s[i]);
              t.push_back(arrow);
            }
          }
          x.set_restriction(n, m, a, e, levels[n].index.at(t));
        }
      }
    }
  }
  return x;
}

ThetaMorphism first_component(const ThetaMorphism& a) {
  const ThetaShape src = a.source.is_point() ? ThetaShape::point() : ThetaShape({a.source.entries()[0]});
  const ThetaShape dst = a.target.is_point() ? ThetaShape::point() : ThetaShape({a.target.entries()[0]});
  ThetaMorphism out{src, dst, {}};
  if (!a.components.empty()) out.components.push_back(a.components[0]);
  return out;
}

Precat promote(const Precat& a) {
  if (a.n() != 1) throw ValidationError("promote expects a 1-precat");
  const int d = a.degree_bound();
  auto support = ThetaSupport::make(2, d);
  const auto& sup = *support;
  const auto& base = a.support();
  Precat x(support);
  std::vector<ShapeId> under(sup.size());
  for (ShapeId s = 0; s < sup.size(); ++s) {
    const auto& shape = sup.shape(s);
    under[s] = shape.is_point() ? base.point() : base.id(ThetaShape({shape.entries()[0]}));
    for (Elem e = 0; e < a.size(under[s]); ++e) x.add_element(s, a.label(under[s], e));
  }
  for (ShapeId n = 0; n < sup.size(); ++n) {
    for (ShapeId m = 0; m < sup.size(); ++m) {
      const auto& h = sup.hom(n, m);
      for (MorId f = 0; f < h.size(); ++f) {
        const MorId g = base.find_morphism(first_component(h[f]));
        for (Elem e = 0; e < x.size(m); ++e) {
          x.set_restriction(n, m, f, e, a.restrict(under[n], under[m], g, e));
        }
      }
    }
  }
  return x;
}

}  // namespace hocalc
