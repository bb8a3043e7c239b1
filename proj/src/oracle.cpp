#include "hocalc/oracle.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "hocalc/error.hpp"

namespace hocalc::oracle {

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // Dense class ids in order of first appearance.
  std::vector<std::size_t> labels(std::size_t& count) {
    std::vector<std::size_t> out(parent.size());
    std::map<std::size_t, std::size_t> ids;
    for (std::size_t i = 0; i < parent.size(); ++i) {
      auto [it, fresh] = ids.emplace(find(i), ids.size());
      out[i] = it->second;
    }
    count = ids.size();
    return out;
  }
};

std::vector<bool> invertible(const FiniteCategory& b) {
  std::vector<bool> out(b.arrow_count(), false);
  for (std::uint32_t f = 0; f < b.arrow_count(); ++f) {
    for (std::uint32_t g = 0; g < b.arrow_count() && !out[f]; ++g) {
      if (b.arrow(g).src != b.arrow(f).dst || b.arrow(g).dst != b.arrow(f).src) continue;
      out[f] = b.compose(f, g) == b.identity(b.arrow(f).src) &&
               b.compose(g, f) == b.identity(b.arrow(f).dst);
    }
  }
  return out;
}

}  // namespace

std::vector<FunctorData> enumerate_functors(const FiniteCategory& a, const FiniteCategory& b) {
  std::vector<FunctorData> out;
  const std::size_t no = a.object_count(), na = a.arrow_count();
  if (no > 0 && b.object_count() == 0) return out;
  FunctorData f{std::vector<std::uint32_t>(no, 0), std::vector<std::uint32_t>(na, 0)};

  auto consistent = [&](std::uint32_t upto) {
    for (std::uint32_t x = 0; x <= upto; ++x) {
      for (std::uint32_t y = 0; y <= upto; ++y) {
        if (a.arrow(x).dst != a.arrow(y).src) continue;
        const auto r = a.compose(x, y);
        if (std::max({x, y, r}) != upto) continue;
        if (r > upto) continue;
        if (f.arrows[r] != b.compose(f.arrows[x], f.arrows[y])) return false;
      }
    }
    return true;
  };

  std::function<void(std::uint32_t)> arrows = [&](std::uint32_t i) {
    if (i == na) {
      out.push_back(f);
      return;
    }
    const auto& arr = a.arrow(i);
    const auto s = f.objects[arr.src], t = f.objects[arr.dst];
    for (std::uint32_t c = 0; c < b.arrow_count(); ++c) {
      if (b.arrow(c).src != s || b.arrow(c).dst != t) continue;
      if (a.is_identity(i) && c != b.identity(s)) continue;
      f.arrows[i] = c;
      if (consistent(i)) arrows(i + 1);
    }
  };

  std::function<void(std::size_t)> objects = [&](std::size_t i) {
    if (i == no) {
      arrows(0);
      return;
    }
    for (std::uint32_t o = 0; o < b.object_count(); ++o) {
      f.objects[i] = o;
      objects(i + 1);
    }
  };
  objects(0);
  return out;
}

bool naturally_isomorphic(const FiniteCategory& a, const FiniteCategory& b, const FunctorData& f,
                          const FunctorData& g) {
  const auto iso = invertible(b);
  std::vector<std::uint32_t> alpha(a.object_count());
  std::function<bool(std::uint32_t)> go = [&](std::uint32_t x) {
    if (x == a.object_count()) return true;
    for (std::uint32_t c = 0; c < b.arrow_count(); ++c) {
      if (!iso[c] || b.arrow(c).src != f.objects[x] || b.arrow(c).dst != g.objects[x]) continue;
      alpha[x] = c;
      bool ok = true;
      for (std::uint32_t h = 0; h < a.arrow_count() && ok; ++h) {
        const auto& arr = a.arrow(h);
        if (std::max(arr.src, arr.dst) != x) continue;
        ok = b.compose(f.arrows[h], alpha[arr.dst]) == b.compose(alpha[arr.src], g.arrows[h]);
      }
      if (ok && go(x + 1)) return true;
    }
    return false;
  };
  return go(0);
}

Partition natural_iso_classes(const std::vector<FunctorData>& functors, const FiniteCategory& a,
                              const FiniteCategory& b) {
  const std::size_t n = functors.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = naturally_isomorphic(a, b, functors[i], functors[j]);
  }
  Partition p;
  Dsu dsu(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.reflexive = p.reflexive && rel[i][i];
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      dsu.join(i, j);
      p.symmetric = p.symmetric && rel[j][i];
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[j][k] && !rel[i][k]) p.transitive = false;
      }
    }
  }
  p.class_of = dsu.labels(p.classes);
  return p;
}

HoCatHom ho_cat_hom(const FiniteCategory& a, const FiniteCategory& b) {
  HoCatHom h;
  h.functors = enumerate_functors(a, b);
  h.partition = natural_iso_classes(h.functors, a, b);
  h.count = h.partition.classes;
  h.representatives.assign(h.count, h.functors.size());
  for (std::size_t i = h.functors.size(); i-- > 0;) h.representatives[h.partition.class_of[i]] = i;
  return h;
}

std::size_t object_iso_classes(const FiniteCategory& b) {
  const auto iso = invertible(b);
  Dsu dsu(b.object_count());
  for (std::uint32_t c = 0; c < b.arrow_count(); ++c) {
    if (iso[c]) dsu.join(b.arrow(c).src, b.arrow(c).dst);
  }
  std::size_t count = 0;
  dsu.labels(count);
  return count;
}

namespace {

// Monotone maps [x] -> [y] for x, y <= bound, with composition tables, and
// mixed-radix ranks of morphisms between n-tuples.
class DeltaTables {
 public:
  DeltaTables(int n, int bound) : n_(n), b_(bound + 1) {
    maps_.resize(b_ * b_);
    for (int x = 0; x < b_; ++x) {
      for (int y = 0; y < b_; ++y) {
        std::vector<int> v(x + 1, 0);
        std::function<void(int, int)> fill = [&](int i, int lo) {
          if (i > x) {
            maps_[x * b_ + y].push_back(v);
            return;
          }
          for (int t = lo; t <= y; ++t) {
            v[i] = t;
            fill(i + 1, t);
          }
        };
        fill(0, 0);
      }
    }
    comp_.resize(b_ * b_ * b_);
    for (int x = 0; x < b_; ++x) {
      for (int y = 0; y < b_; ++y) {
        for (int z = 0; z < b_; ++z) {
          const auto& f = maps(x, y);
          const auto& g = maps(y, z);
          std::map<std::vector<int>, int> index;
          const auto& h = maps(x, z);
          for (int i = 0; i < static_cast<int>(h.size()); ++i) index[h[i]] = i;
          auto& table = comp_[(x * b_ + y) * b_ + z];
          table.assign(f.size() * g.size(), 0);
          for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = 0; j < g.size(); ++j) {
              std::vector<int> v(x + 1);
              for (int k = 0; k <= x; ++k) v[k] = g[j][f[i][k]];
              table[i * g.size() + j] = index.at(v);
            }
          }
        }
      }
    }
    std::vector<int> t(n_, 0);
    std::function<void(int)> all = [&](int i) {
      if (i == n_) {
        objects_.push_back(t);
        return;
      }
      for (int v = 0; v < b_; ++v) {
        t[i] = v;
        all(i + 1);
      }
    };
    all(0);
  }

  int n() const { return n_; }
  const std::vector<std::vector<int>>& objects() const { return objects_; }
  const std::vector<std::vector<int>>& maps(int x, int y) const { return maps_[x * b_ + y]; }
  int compose(int x, int y, int z, int f, int g) const {
    return comp_[(x * b_ + y) * b_ + z][f * maps(y, z).size() + g];
  }

  std::size_t hom_size(const std::vector<int>& x, const std::vector<int>& y) const {
    std::size_t s = 1;
    for (int k = 0; k < n_; ++k) s *= maps(x[k], y[k]).size();
    return s;
  }
  // Component indices of the r-th morphism x -> y.
  std::vector<int> unrank(const std::vector<int>& x, const std::vector<int>& y, std::size_t r) const {
    std::vector<int> c(n_);
    for (int k = n_ - 1; k >= 0; --k) {
      const auto s = maps(x[k], y[k]).size();
      c[k] = static_cast<int>(r % s);
      r /= s;
    }
    return c;
  }
  std::size_t rank(const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& c) const {
    std::size_t r = 0;
    for (int k = 0; k < n_; ++k) r = r * maps(x[k], y[k]).size() + c[k];
    return r;
  }

 private:
  int n_;
  int b_;
  std::vector<std::vector<std::vector<int>>> maps_;
  std::vector<std::vector<int>> comp_;
  std::vector<std::vector<int>> objects_;
};

bool normalized(const std::vector<int>& x) {
  bool zero = false;
  for (int v : x) {
    if (zero && v != 0) return false;
    zero = zero || v == 0;
  }
  return true;
}

}  // namespace

ThetaClosure theta_congruence_closure(int n, int bound) {
  if (n < 1 || bound < 1) throw ValidationError("closure needs n >= 1 and bound >= 1");
  if (n > 4 || bound > 3) throw BoundError("closure bound too large");
  DeltaTables t(n, bound);
  ThetaClosure out;
  out.n = n;
  out.bound = bound;

  std::vector<const std::vector<int>*> norm;
  for (const auto& x : t.objects()) {
    if (normalized(x)) norm.push_back(&x);
  }
  for (const auto* xp : norm) {
    for (const auto* zp : norm) {
      const auto& x = *xp;
      const auto& z = *zp;
      Dsu dsu(t.hom_size(x, z));
      for (const auto& y : t.objects()) {
        int p = 0;
        while (p < n && y[p] != 0) ++p;
        if (p == n) continue;
        const auto ha = t.hom_size(x, y), hb = t.hom_size(y, z);
        std::vector<int> comp(n), comp_rep(n);
        for (std::size_t ai = 0; ai < ha; ++ai) {
          const auto a = t.unrank(x, y, ai);
          for (std::size_t bi = 0; bi < hb; ++bi) {
            const auto b = t.unrank(y, z, bi);
            bool differs = false;
            for (int k = 0; k < n; ++k) {
              comp[k] = t.compose(x[k], y[k], z[k], a[k], b[k]);
              // Constant-zero component is index 0 in lexicographic order.
              comp_rep[k] = k <= p ? comp[k] : t.compose(x[k], y[k], z[k], a[k], 0);
              differs = differs || comp[k] != comp_rep[k];
            }
            if (!differs) continue;
            ++out.generating_pairs;
            dsu.join(t.rank(x, z, comp), t.rank(x, z, comp_rep));
          }
        }
      }
      ClosureClasses cc;
      cc.source = x;
      cc.target = z;
      for (std::size_t r = 0; r < t.hom_size(x, z); ++r) {
        const auto c = t.unrank(x, z, r);
        DeltaMorphism m{x, z, {}};
        for (int k = 0; k < n; ++k) m.components.push_back(t.maps(x[k], z[k])[c[k]]);
        cc.morphisms.push_back(std::move(m));
      }
      cc.class_of = dsu.labels(cc.classes);
      out.homs.push_back(std::move(cc));
    }
  }
  return out;
}

std::size_t congruence_failures(const ThetaClosure& c) {
  DeltaTables t(c.n, c.bound);
  std::map<std::pair<std::vector<int>, std::vector<int>>, const ClosureClasses*> by_pair;
  for (const auto& h : c.homs) by_pair[{h.source, h.target}] = &h;
  std::size_t failures = 0;
  // Post-composition with every g: z -> w; pre-composition with every f: w -> x.
  for (const auto& h : c.homs) {
    const auto& x = h.source;
    const auto& z = h.target;
    for (const auto& [key, unused] : by_pair) {
      (void)unused;
      if (key.first == z) {
        const auto& w = key.second;
        for (std::size_t gi = 0; gi < t.hom_size(z, w); ++gi) {
          const auto g = t.unrank(z, w, gi);
          std::map<std::size_t, std::size_t> image;  // class in h -> class in other
          for (std::size_t r = 0; r < h.morphisms.size(); ++r) {
            const auto f = t.unrank(x, z, r);
            std::vector<int> comp(c.n);
            for (int k = 0; k < c.n; ++k) comp[k] = t.compose(x[k], z[k], w[k], f[k], g[k]);
            const auto cls = by_pair.at({x, w})->class_of[t.rank(x, w, comp)];
            auto [it, fresh] = image.emplace(h.class_of[r], cls);
            if (!fresh && it->second != cls) ++failures;
          }
        }
      }
      if (key.second == x) {
        const auto& w = key.first;
        for (std::size_t fi = 0; fi < t.hom_size(w, x); ++fi) {
          const auto f = t.unrank(w, x, fi);
          std::map<std::size_t, std::size_t> image;
          for (std::size_t r = 0; r < h.morphisms.size(); ++r) {
            const auto g = t.unrank(x, z, r);
            std::vector<int> comp(c.n);
            for (int k = 0; k < c.n; ++k) comp[k] = t.compose(w[k], x[k], z[k], f[k], g[k]);
            const auto cls = by_pair.at({w, z})->class_of[t.rank(w, z, comp)];
            auto [it, fresh] = image.emplace(h.class_of[r], cls);
            if (!fresh && it->second != cls) ++failures;
          }
        }
      }
    }
  }
  return failures;
}

}  // namespace hocalc::oracle
