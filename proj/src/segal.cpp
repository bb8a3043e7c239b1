#include "hocalc/segal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hocalc/error.hpp"
#include "hocalc/lifting.hpp"

namespace hocalc {

namespace {

ThetaShape sh(std::vector<int> e) { return ThetaShape(std::move(e)); }

// (1) -> (m) picking the edge i -> j, as a morphism of the given support.
MorId edge(const ThetaSupport& sup, const ThetaShape& target, int i, int j) {
  return sup.find_morphism(ThetaMorphism{sh({1}), target, {MonotoneMap(target.entries()[0], {i, j})}});
}

MorId degeneracy_to_point(const ThetaSupport& sup) {
  return sup.find_morphism(ThetaMorphism{sh({1}), ThetaShape::point(), {}});
}

std::string join_labels(const Precat& x, ShapeId level, const std::vector<Elem>& es) {
  std::string out = "(";
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? ", " : "") + x.label(level, es[i]);
  return out + ")";
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::optional<std::uint32_t> inverse_of(const FiniteCategory& c, std::uint32_t g) {
  const auto& ga = c.arrow(g);
  for (std::uint32_t h = 0; h < c.arrow_count(); ++h) {
    const auto& ha = c.arrow(h);
    if (ha.src != ga.dst || ha.dst != ga.src) continue;
    if (c.compose(g, h) == c.identity(ga.src) && c.compose(h, g) == c.identity(ga.dst)) return h;
  }
  return std::nullopt;
}

// Segal bijections of a 1-precat.
CheckResult segal_n1(const Precat& x) {
  const auto& sup = x.support();
  const int d = x.degree_bound();
  if (d < 2) return {};
  const ShapeId one = sup.id(sh({1}));
  std::vector<std::vector<Elem>> from(x.size(sup.point()));
  for (Elem e = 0; e < x.size(one); ++e) from[x.vertices(one, e)[0]].push_back(e);
  for (int m = 2; m <= d; ++m) {
    const ShapeId mid = sup.id(sh({m}));
    std::vector<MorId> spine;
    for (int i = 0; i < m; ++i) spine.push_back(edge(sup, sh({m}), i, i + 1));
    std::map<std::vector<Elem>, Elem> seen;
    for (Elem z = 0; z < x.size(mid); ++z) {
      std::vector<Elem> s;
      for (MorId e : spine) s.push_back(x.restrict(one, mid, e, z));
      auto [it, fresh] = seen.emplace(s, z);
      if (!fresh) {
        return {false, "level (" + std::to_string(m) + "): elements " + x.label(mid, it->second) +
                           " and " + x.label(mid, z) + " share the spine " +
                           join_labels(x, one, s)};
      }
    }
    // Every composable chain must occur.
    std::vector<Elem> chain;
    std::string missing;
    auto walk = [&](auto&& self) -> bool {
      if (static_cast<int>(chain.size()) == m) {
        if (!seen.count(chain)) {
          missing = join_labels(x, one, chain);
          return false;
        }
        return true;
      }
      std::vector<Elem> next;
      if (chain.empty()) {
        next.resize(x.size(one));
        std::iota(next.begin(), next.end(), Elem{0});
      } else {
        next = from[x.vertices(one, chain.back())[1]];
      }
      for (Elem e : next) {
        chain.push_back(e);
        if (!self(self)) return false;
        chain.pop_back();
      }
      return true;
    };
    if (!walk(walk)) {
      return {false, "level (" + std::to_string(m) + "): no element over the composable chain " +
                         missing};
    }
  }
  return {};
}

struct RowTables {
  std::shared_ptr<const ThetaSupport> sup1;
  std::vector<ShapeId> shape2;  // Theta^1 shape -> Theta^2 shape
  // [N1 * S1 + M1][a] -> Theta^2 morphism id
  std::vector<std::vector<MorId>> morphism2;
};

RowTables row_tables(const ThetaSupport& sup2, int m) {
  RowTables t;
  t.sup1 = ThetaSupport::make(1, sup2.degree_bound());
  const auto& sup1 = *t.sup1;
  for (const auto& s : sup1.shapes()) {
    t.shape2.push_back(s.is_point() ? sup2.id(sh({m})) : sup2.id(sh({m, s.entries()[0]})));
  }
  t.morphism2.resize(sup1.size() * sup1.size());
  for (ShapeId a = 0; a < sup1.size(); ++a) {
    for (ShapeId b = 0; b < sup1.size(); ++b) {
      const auto& h = sup1.hom(a, b);
      for (const auto& phi : h) {
        const auto& sa = sup2.shape(t.shape2[a]);
        const auto& sb = sup2.shape(t.shape2[b]);
        std::vector<MonotoneMap> raw{MonotoneMap::identity(m)};
        raw.push_back(phi.components.empty()
                          ? MonotoneMap::constant(sup1.shape(a).padded(0), 0, 0)
                          : phi.components[0]);
        t.morphism2[a * sup1.size() + b].push_back(sup2.find_morphism(canonicalize(sa, sb, raw)));
      }
    }
  }
  return t;
}

SubPrecat sub_row(const Precat& x, int m, const std::vector<Elem>* xs) {
  if (x.n() != 2) throw ValidationError("rows and slices need a 2-precat");
  const auto& sup2 = x.support();
  if (m < 1 || m > x.degree_bound()) throw ValidationError("row index out of bound");
  if (xs) {
    if (static_cast<int>(xs->size()) != m + 1) throw ValidationError("slice needs m+1 objects");
    for (Elem o : *xs) {
      if (o >= x.size(sup2.point())) throw ValidationError("slice object out of range");
    }
  }
  const auto t = row_tables(sup2, m);
  const auto& sup1 = *t.sup1;
  SubPrecat out{Precat(t.sup1), std::vector<std::vector<Elem>>(sup1.size())};
  std::vector<std::vector<Elem>> reverse(sup1.size());
  for (ShapeId l = 0; l < sup1.size(); ++l) {
    const ShapeId l2 = t.shape2[l];
    reverse[l].assign(x.size(l2), Precat::kUnset);
    for (Elem e = 0; e < x.size(l2); ++e) {
      if (xs && x.vertices(l2, e) != *xs) continue;
      reverse[l][e] = out.object.add_element(l, x.label(l2, e));
      out.embedding[l].push_back(e);
    }
  }
  for (ShapeId a = 0; a < sup1.size(); ++a) {
    for (ShapeId b = 0; b < sup1.size(); ++b) {
      const auto& ms = t.morphism2[a * sup1.size() + b];
      for (MorId phi = 0; phi < ms.size(); ++phi) {
        for (Elem e = 0; e < out.embedding[b].size(); ++e) {
          const Elem r = x.restrict(t.shape2[a], t.shape2[b], ms[phi], out.embedding[b][e]);
          out.object.set_restriction(a, b, phi, e, reverse[a][r]);
        }
      }
    }
  }
  return out;
}

std::vector<std::vector<Elem>> reverse_index(const SubPrecat& s, const Precat& ambient,
                                             const std::vector<ShapeId>& shape2) {
  std::vector<std::vector<Elem>> out(s.embedding.size());
  for (std::size_t l = 0; l < s.embedding.size(); ++l) {
    out[l].assign(ambient.size(shape2[l]), Precat::kUnset);
    for (Elem e = 0; e < s.embedding[l].size(); ++e) out[l][s.embedding[l][e]] = e;
  }
  return out;
}

// Functor between underlying categories induced by a map of 1-precats given
// through embeddings into ambient levels.
Functor induced_functor(const UnderlyingCategory& a, const UnderlyingCategory& b,
                        const std::vector<Elem>& objects, const std::vector<Elem>& arrows) {
  Functor f;
  f.objects = std::vector<std::uint32_t>(objects.begin(), objects.end());
  for (std::uint32_t g = 0; g < a.category.arrow_count(); ++g) {
    f.arrows.push_back(b.arrow_of[arrows[a.element_of[g]]]);
  }
  return f;
}

struct SegalCategory {
  UnderlyingCategory base;
  std::map<std::vector<std::uint32_t>, std::uint32_t> arrow_index;
  std::map<std::vector<std::uint32_t>, std::uint32_t> object_index;
};

// C_1 x_{X_0} ... x_{X_0} C_1 with m factors. Objects of C_1 are elements of
// X_(1); their endpoints in X_() give the matching condition.
SegalCategory fiber_power(const Precat& x, const UnderlyingCategory& c1, int m) {
  const auto& sup = x.support();
  const ShapeId one = sup.id(sh({1}));
  const auto& c = c1.category;
  SegalCategory out;
  auto& p = out.base.category;
  std::vector<std::vector<std::uint32_t>> objects;
  std::vector<std::uint32_t> cur;
  auto chains = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == m) {
      objects.push_back(cur);
      return;
    }
    for (std::uint32_t o = 0; o < c.object_count(); ++o) {
      if (!cur.empty() && x.vertices(one, cur.back())[1] != x.vertices(one, o)[0]) continue;
      cur.push_back(o);
      self(self);
      cur.pop_back();
    }
  };
  chains(chains);
  auto name_of = [&](const std::vector<std::uint32_t>& t, bool arrows) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
      s += (i ? "," : "") + (arrows ? c.arrow(t[i]).name : c.object_name(t[i]));
    }
    return s;
  };
  for (const auto& o : objects) {
    const auto id = p.add_object(name_of(o, false));
    out.object_index[o] = id;
    std::vector<std::uint32_t> ids;
    for (auto k : o) ids.push_back(c.identity(k));
    out.arrow_index[ids] = p.identity(id);
  }
  std::vector<std::vector<std::uint32_t>> by_src(c.object_count());
  for (std::uint32_t a = 0; a < c.arrow_count(); ++a) by_src[c.arrow(a).src].push_back(a);
  for (const auto& o : objects) {
    std::vector<std::uint32_t> t;
    auto tuples = [&](auto&& self) -> void {
      if (t.size() == o.size()) {
        if (out.arrow_index.count(t)) return;
        std::vector<std::uint32_t> dst;
        for (auto a : t) dst.push_back(c.arrow(a).dst);
        out.arrow_index[t] =
            p.add_arrow(name_of(t, true), out.object_index.at(o), out.object_index.at(dst));
        return;
      }
      for (auto a : by_src[o[t.size()]]) {
        t.push_back(a);
        self(self);
        t.pop_back();
      }
    };
    tuples(tuples);
  }
  std::vector<std::vector<std::uint32_t>> tuple_of(p.arrow_count());
  for (const auto& [t, a] : out.arrow_index) tuple_of[a] = t;
  for (std::uint32_t a = 0; a < p.arrow_count(); ++a) {
    for (std::uint32_t b = 0; b < p.arrow_count(); ++b) {
      if (p.arrow(a).dst != p.arrow(b).src) continue;
      std::vector<std::uint32_t> r;
      for (int i = 0; i < m; ++i) r.push_back(c.compose(tuple_of[a][i], tuple_of[b][i]));
      p.set_composite(a, b, out.arrow_index.at(r));
    }
  }
  return out;
}

CheckResult ncategory_n2(const Precat& x) {
  const auto& sup = x.support();
  const int d = x.degree_bound();
  if (d < 2) throw ValidationError("2-category checks need degree bound >= 2");
  std::vector<UnderlyingCategory> cats;
  std::vector<SubPrecat> rows;
  for (int m = 1; m <= d; ++m) {
    rows.push_back(row(x, m));
    auto r = segal_n1(rows.back().object);
    if (!r.ok) return {false, "row " + std::to_string(m) + " is not a 1-category: " + r.witness};
    try {
      cats.push_back(underlying_category(rows.back().object));
    } catch (const ValidationError& e) {
      return {false, "row " + std::to_string(m) + ": " + e.what()};
    }
  }
  const ShapeId one = sup.id(sh({1}));
  const ShapeId sq = sup.id(sh({1, 1}));
  for (int m = 2; m <= d; ++m) {
    const auto target = fiber_power(x, cats[0], m);
    const ShapeId mid = sup.id(sh({m}));
    const ShapeId mid1 = sup.id(sh({m, 1}));
    Functor f;
    for (Elem z = 0; z < x.size(mid); ++z) {
      std::vector<std::uint32_t> t;
      for (int i = 0; i < m; ++i) t.push_back(x.restrict(one, mid, edge(sup, sh({m}), i, i + 1), z));
      f.objects.push_back(target.object_index.at(t));
    }
    const auto& cm = cats[m - 1];
    for (std::uint32_t a = 0; a < cm.category.arrow_count(); ++a) {
      const Elem z = cm.element_of[a];
      std::vector<std::uint32_t> t;
      for (int i = 0; i < m; ++i) {
        std::vector<MonotoneMap> raw{MonotoneMap(m, {i, i + 1}), MonotoneMap::identity(1)};
        const MorId e = sup.find_morphism(canonicalize(sh({1, 1}), sh({m, 1}), raw));
        t.push_back(cats[0].arrow_of[x.restrict(sq, mid1, e, z)]);
      }
      f.arrows.push_back(target.arrow_index.at(t));
    }
    auto r = is_equivalence(cm.category, target.base.category, f);
    if (!r.ok) {
      return {false, "Segal functor at (" + std::to_string(m) + ") is not an equivalence: " +
                         r.witness};
    }
  }
  return {};
}

}  // namespace

UnderlyingCategory underlying_category(const Precat& x) {
  if (x.n() != 1) throw ValidationError("underlying_category expects a 1-precat");
  if (x.degree_bound() < 2) throw ValidationError("composition needs degree bound >= 2");
  if (auto r = segal_n1(x); !r.ok) throw ValidationError("not a 1-category: " + r.witness);
  const auto& sup = x.support();
  const ShapeId one = sup.id(sh({1}));
  const ShapeId two = sup.id(sh({2}));
  const MorId deg = degeneracy_to_point(sup);
  UnderlyingCategory out;
  auto& c = out.category;
  out.arrow_of.assign(x.size(one), 0);
  std::vector<bool> done(x.size(one), false);
  std::set<std::string> names;
  for (Elem o = 0; o < x.size(sup.point()); ++o) {
    std::string name = x.label(sup.point(), o);
    if (!names.insert(name).second) name += "#" + std::to_string(o);
    names.insert(name);
    const auto id = c.add_object(name);
    const Elem s = x.restrict(one, sup.point(), deg, o);
    out.arrow_of[s] = c.identity(id);
    done[s] = true;
    names.insert("id_" + name);
  }
  for (Elem e = 0; e < x.size(one); ++e) {
    if (done[e]) continue;
    const auto v = x.vertices(one, e);
    std::string name = x.label(one, e);
    if (!names.insert(name).second) name += "#" + std::to_string(e);
    names.insert(name);
    out.arrow_of[e] = c.add_arrow(name, v[0], v[1]);
  }
  out.element_of.assign(c.arrow_count(), 0);
  for (Elem e = 0; e < x.size(one); ++e) out.element_of[out.arrow_of[e]] = e;
  const MorId e01 = edge(sup, sh({2}), 0, 1);
  const MorId e12 = edge(sup, sh({2}), 1, 2);
  const MorId e02 = edge(sup, sh({2}), 0, 2);
  for (Elem z = 0; z < x.size(two); ++z) {
    c.set_composite(out.arrow_of[x.restrict(one, two, e01, z)],
                    out.arrow_of[x.restrict(one, two, e12, z)],
                    out.arrow_of[x.restrict(one, two, e02, z)]);
  }
  c.validate();
  return out;
}

CheckResult is_equivalence(const FiniteCategory& a, const FiniteCategory& b, const Functor& f) {
  for (std::uint32_t p = 0; p < a.object_count(); ++p) {
    for (std::uint32_t q = 0; q < a.object_count(); ++q) {
      std::vector<int> hit(b.arrow_count(), 0);
      for (std::uint32_t g = 0; g < a.arrow_count(); ++g) {
        if (a.arrow(g).src != p || a.arrow(g).dst != q) continue;
        if (hit[f.arrows[g]]++) {
          return {false, "not faithful on " + a.object_name(p) + " -> " + a.object_name(q) +
                             ": two arrows map to " + b.arrow(f.arrows[g]).name};
        }
      }
      for (std::uint32_t h = 0; h < b.arrow_count(); ++h) {
        if (b.arrow(h).src == f.objects[p] && b.arrow(h).dst == f.objects[q] && !hit[h]) {
          return {false, "not full on " + a.object_name(p) + " -> " + a.object_name(q) + ": " +
                             b.arrow(h).name + " is not hit"};
        }
      }
    }
  }
  for (std::uint32_t y = 0; y < b.object_count(); ++y) {
    bool found = false;
    for (std::uint32_t p = 0; p < a.object_count() && !found; ++p) {
      for (std::uint32_t h = 0; h < b.arrow_count() && !found; ++h) {
        if (b.arrow(h).src == f.objects[p] && b.arrow(h).dst == y && inverse_of(b, h)) found = true;
      }
    }
    if (!found) return {false, "not essentially surjective: " + b.object_name(y) + " is missed"};
  }
  return {};
}

CheckResult is_ncategory(const Precat& x) {
  if (x.n() == 1) return segal_n1(x);
  if (x.n() == 2) return ncategory_n2(x);
  throw ValidationError("n-category checks are implemented for n <= 2");
}

SubPrecat row(const Precat& x, int m) { return sub_row(x, m, nullptr); }

SubPrecat slice(const Precat& x, int m, const std::vector<Elem>& xs) { return sub_row(x, m, &xs); }

CheckResult is_equivalence(const Precat& x, const Precat& y, const PrecatMap& f) {
  if (x.n() != y.n() || x.degree_bound() != y.degree_bound()) {
    throw ValidationError("equivalence check across different bounds");
  }
  if (auto r = is_ncategory(x); !r.ok) throw ValidationError("source is not an n-category: " + r.witness);
  if (auto r = is_ncategory(y); !r.ok) throw ValidationError("target is not an n-category: " + r.witness);
  if (auto err = check_natural(x, y, f)) throw ValidationError(*err);
  const auto& sup = x.support();
  const ShapeId pt = sup.point();
  const ShapeId one = sup.id(sh({1}));
  if (x.n() == 1) {
    if (x.degree_bound() < 2) {
      // No composition data: compare as graphs up to the bound.
      return is_levelwise_bijective(x, y, f) ? CheckResult{}
                                             : CheckResult{false, "not bijective at d = 1"};
    }
    auto a = underlying_category(x);
    auto b = underlying_category(y);
    return is_equivalence(a.category, b.category, induced_functor(a, b, f.levels[pt], f.levels[one]));
  }

  // Fully faithful on the slices over pairs of objects.
  const auto t = row_tables(sup, 1);
  for (Elem p = 0; p < x.size(pt); ++p) {
    for (Elem q = 0; q < x.size(pt); ++q) {
      auto sx = slice(x, 1, {p, q});
      auto sy = slice(y, 1, {f(pt, p), f(pt, q)});
      const auto ry = reverse_index(sy, y, t.shape2);
      const auto& s1 = sx.object.support();
      const ShapeId o1 = s1.id(sh({1}));
      std::vector<Elem> objs, arrows;
      for (Elem e : sx.embedding[s1.point()]) objs.push_back(ry[s1.point()][f(t.shape2[s1.point()], e)]);
      for (Elem e : sx.embedding[o1]) arrows.push_back(ry[o1][f(t.shape2[o1], e)]);
      auto a = underlying_category(sx.object);
      auto b = underlying_category(sy.object);
      auto r = is_equivalence(a.category, b.category, induced_functor(a, b, objs, arrows));
      if (!r.ok) {
        return {false, "slice over (" + x.label(pt, p) + ", " + x.label(pt, q) + "): " + r.witness};
      }
    }
  }

  // Essential surjectivity on the truncation of y.
  const auto r1 = row(y, 1);
  const auto c1 = underlying_category(r1.object);
  const auto& c = c1.category;
  UnionFind cls(c.object_count());
  for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
    if (inverse_of(c, g)) cls.unite(c.arrow(g).src, c.arrow(g).dst);
  }
  const ShapeId two = sup.id(sh({2}));
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> comp;
  for (Elem z = 0; z < y.size(two); ++z) {
    comp.emplace(cls.find(y.restrict(one, two, edge(sup, sh({2}), 0, 1), z)),
                 cls.find(y.restrict(one, two, edge(sup, sh({2}), 1, 2), z)),
                 cls.find(y.restrict(one, two, edge(sup, sh({2}), 0, 2), z)));
  }
  const MorId deg = degeneracy_to_point(sup);
  auto ident = [&](Elem o) { return cls.find(y.restrict(one, pt, deg, o)); };
  auto equivalent = [&](Elem a, Elem b) {
    for (Elem u = 0; u < y.size(one); ++u) {
      if (y.vertices(one, u) != std::vector<Elem>{a, b}) continue;
      for (Elem w = 0; w < y.size(one); ++w) {
        if (y.vertices(one, w) != std::vector<Elem>{b, a}) continue;
        const auto cu = cls.find(u), cw = cls.find(w);
        if (comp.count({cu, cw, ident(a)}) && comp.count({cw, cu, ident(b)})) return true;
      }
    }
    return false;
  };
  for (Elem o = 0; o < y.size(pt); ++o) {
    bool found = false;
    for (Elem p = 0; p < x.size(pt) && !found; ++p) found = equivalent(f(pt, p), o);
    if (!found) return {false, "not essentially surjective: " + y.label(pt, o) + " is missed"};
  }
  return {};
}

SliceReduction slice_reduction_check(const Precat& x, const Precat& y, const PrecatMap& f,
                                     const ThetaShape& shape) {
  if (x.n() != 2 || y.n() != 2) throw ValidationError("slice reduction needs 2-precats");
  if (shape.length() < 1 || shape.length() > 2) throw ValidationError("shape must be (m) or (m, q)");
  const auto& sup = x.support();
  const int m = shape.entries()[0];
  const ShapeId mid = sup.id(shape);
  const ShapeId pt = sup.point();
  auto bs2 = BoundaryStructure::make(x.support_ptr());
  auto bs1 = BoundaryStructure::make(ThetaSupport::make(1, x.degree_bound()));
  const auto& sup1 = bs1->support();
  const ShapeId n1 = shape.length() == 1 ? sup1.point() : sup1.id(sh({shape.entries()[1]}));

  auto verdicts = [](const LiftingContext& ctx, ShapeId s) {
    std::set<std::vector<Elem>> lifts;
    for (Elem w = 0; w < ctx.source.size(s); ++w) {
      auto key = face_restrictions(ctx.source, ctx.boundary, s, w);
      key.push_back(ctx.map(s, w));
      lifts.insert(key);
    }
    std::map<LiftSquare, bool> out;
    for (const auto& sq : enumerate_squares(ctx, s)) {
      auto key = sq.boundary;
      key.push_back(sq.base);
      out[sq] = lifts.count(key) > 0;
    }
    return out;
  };

  SliceReduction out;
  const auto full = verdicts(LiftingContext{x, y, f, *bs2}, mid);
  std::map<LiftSquare, bool> matched;
  const auto t = row_tables(sup, m);

  std::vector<Elem> xs(m + 1, 0);
  const Elem objects = static_cast<Elem>(x.size(pt));
  if (objects == 0) {
    out.result.ok = full.empty();
    if (!out.result.ok) out.result.witness = "squares exist over an empty object set";
    return out;
  }
  while (true) {
    std::vector<Elem> fxs;
    for (Elem o : xs) fxs.push_back(f(pt, o));
    auto sx = slice(x, m, xs);
    auto sy = slice(y, m, fxs);
    const auto ry = reverse_index(sy, y, t.shape2);
    PrecatMap sf;
    for (ShapeId l = 0; l < sup1.size(); ++l) {
      auto& level = sf.levels.emplace_back();
      for (Elem e : sx.embedding[l]) level.push_back(ry[l][f(t.shape2[l], e)]);
    }
    for (const auto& [sq, lifted] : verdicts(LiftingContext{sx.object, sy.object, sf, *bs1}, n1)) {
      LiftSquare image{mid, {}, sy.embedding[n1][sq.base]};
      if (shape.length() == 1) {
        image.boundary = xs;
      } else {
        for (Elem w : sq.boundary) image.boundary.push_back(sx.embedding[sup1.point()][w]);
      }
      auto it = full.find(image);
      if (it == full.end() || matched.count(image)) {
        out.result = {false, "slice square over " + join_labels(x, pt, xs) +
                                 " has no unique counterpart of shape " + shape.str()};
        return out;
      }
      matched[image] = true;
      ++out.squares;
      if (it->second != lifted) {
        out.result = {false, "lift verdicts differ over " + join_labels(x, pt, xs) + " for base " +
                                 y.label(mid, image.base)};
        return out;
      }
      if (lifted) ++out.lifted;
    }
    int i = m;
    while (i >= 0 && xs[i] + 1 == objects) xs[i--] = 0;
    if (i < 0) break;
    ++xs[i];
  }
  if (matched.size() != full.size()) {
    out.result = {false, std::to_string(full.size() - matched.size()) +
                             " squares of shape " + shape.str() + " have no slice counterpart"};
  }
  return out;
}

}  // namespace hocalc
