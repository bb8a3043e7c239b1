#include "hocalc/homcalc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hocalc/error.hpp"
#include "hocalc/fixtures.hpp"
#include "hocalc/lifting.hpp"
#include "hocalc/nerve.hpp"
#include "hocalc/oracle.hpp"

namespace hocalc {

namespace {

// Elements of B_M keyed by their face restrictions, built per shape on
// first use.
class CandidateIndex {
 public:
  CandidateIndex(const CellComplex& w, const Precat& b) : w_(w), b_(b), index_(b.support().size()) {
    if (b.n() != w.support().n() || b.degree_bound() != w.support().degree_bound()) {
      throw ValidationError("complex and target have different bounds");
    }
  }

  // Candidates for cell c given the images of the cells before it.
  const std::vector<Elem>& candidates(std::uint32_t c, const std::vector<Elem>& images) {
    const auto& cell = w_.cell(c);
    auto& idx = index_[cell.shape];
    if (!idx) {
      idx.emplace();
      for (Elem e = 0; e < b_.size(cell.shape); ++e) {
        (*idx)[face_restrictions(b_, w_.boundary(), cell.shape, e)].push_back(e);
      }
    }
    key_.clear();
    if (const auto src = w_.boundary().face_source(cell.shape)) {
      for (const auto& ref : cell.attachment) {
        key_.push_back(b_.restrict(*src, w_.cell(ref.cell).shape, ref.interior, images[ref.cell]));
      }
    }
    const auto it = idx->find(key_);
    return it == idx->end() ? empty_ : it->second;
  }

 private:
  const CellComplex& w_;
  const Precat& b_;
  std::vector<std::optional<std::map<std::vector<Elem>, std::vector<Elem>>>> index_;
  std::vector<Elem> key_;
  const std::vector<Elem> empty_;
};

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
  std::vector<std::size_t> labels(std::size_t& count) {
    std::vector<std::size_t> out(parent.size());
    std::map<std::size_t, std::size_t> ids;
    for (std::size_t i = 0; i < parent.size(); ++i) {
      out[i] = ids.emplace(find(i), ids.size()).first->second;
    }
    count = ids.size();
    return out;
  }
};

std::map<std::vector<Elem>, std::size_t> index_of(const std::vector<ComplexMap>& maps) {
  std::map<std::vector<Elem>, std::size_t> out;
  for (std::size_t i = 0; i < maps.size(); ++i) out[maps[i].images] = i;
  return out;
}

}  // namespace

MapSet enumerate_maps(const CellComplex& w, const Precat& b, const MapSearchConfig& config) {
  CandidateIndex index(w, b);
  const auto n = static_cast<std::uint32_t>(w.size());
  MapSet out;
  out.stats.visits.assign(n, 0);
  out.stats.candidates.assign(n, 0);
  if (n == 0) {
    out.maps.push_back(ComplexMap{});
    return out;
  }
  std::vector<Elem> images(n, Precat::kUnset);
  std::vector<const std::vector<Elem>*> lists(n);
  std::vector<std::size_t> pos(n, 0);
  auto enter = [&](std::uint32_t c) {
    lists[c] = &index.candidates(c, images);
    pos[c] = 0;
    ++out.stats.visits[c];
    out.stats.candidates[c] += lists[c]->size();
    if (lists[c]->empty()) ++out.stats.dead_ends;
  };
  std::uint32_t c = 0;
  enter(0);
  while (true) {
    if (pos[c] < lists[c]->size()) {
      images[c] = (*lists[c])[pos[c]++];
      ++out.stats.nodes;
      if (c + 1 == n) {
        if (out.maps.size() == config.max_maps) {
          throw BoundError("more than " + std::to_string(config.max_maps) + " maps");
        }
        out.maps.push_back(ComplexMap{images});
      } else {
        enter(++c);
      }
    } else if (c == 0) {
      break;
    } else {
      --c;
    }
  }
  return out;
}

std::optional<ComplexMap> find_extension(const CellComplex& w, const Precat& b,
                                         const std::vector<Elem>& prefix) {
  const auto n = static_cast<std::uint32_t>(w.size());
  const auto p = static_cast<std::uint32_t>(prefix.size());
  if (p > n) throw ValidationError("prefix longer than the complex");
  CandidateIndex index(w, b);
  std::vector<Elem> images(n, Precat::kUnset);
  std::copy(prefix.begin(), prefix.end(), images.begin());
  for (std::uint32_t c = 0; c < p; ++c) {
    const auto& l = index.candidates(c, images);
    if (!std::binary_search(l.begin(), l.end(), images[c])) return std::nullopt;
  }
  if (p == n) return ComplexMap{images};

  // Conflict-directed backjumping: a cell's candidates depend only on the
  // images of the cells it is attached to.
  std::vector<std::vector<std::uint32_t>> parents(n);
  for (std::uint32_t c = 0; c < n; ++c) {
    for (const auto& ref : w.cell(c).attachment) parents[c].push_back(ref.cell);
  }
  std::vector<std::set<std::uint32_t>> conflict(n);
  std::vector<const std::vector<Elem>*> lists(n);
  std::vector<std::size_t> pos(n, 0);
  auto enter = [&](std::uint32_t c) {
    lists[c] = &index.candidates(c, images);
    pos[c] = 0;
    conflict[c].clear();
  };
  std::uint32_t c = p;
  enter(c);
  while (true) {
    if (pos[c] < lists[c]->size()) {
      images[c] = (*lists[c])[pos[c]++];
      if (c + 1 == n) return ComplexMap{images};
      enter(++c);
      continue;
    }
    conflict[c].insert(parents[c].begin(), parents[c].end());
    if (conflict[c].empty()) return std::nullopt;
    const auto h = *conflict[c].rbegin();
    if (h < p) return std::nullopt;
    for (auto x : conflict[c]) {
      if (x != h) conflict[h].insert(x);
    }
    for (auto j = h + 1; j <= c; ++j) images[j] = Precat::kUnset;
    c = h;
  }
}

std::vector<RelationEdge> relation_edges(const Resolution& res, const Precat& b,
                                         const std::vector<ComplexMap>& maps) {
  if (!res.f1) throw ValidationError("relation edges need F1");
  std::vector<RelationEdge> out;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j < maps.size(); ++j) {
      auto prefix = maps[i].images;
      prefix.insert(prefix.end(), maps[j].images.begin(), maps[j].images.end());
      if (auto h = find_extension(res.f1->complex(), b, prefix)) out.push_back({i, j, std::move(*h)});
    }
  }
  return out;
}

HomClasses hom_classes(const Resolution& res, const Precat& b, const MapSearchConfig& config) {
  if (!res.f0 || !res.f1) throw ValidationError("hom classes need F0 and F1");
  HomClasses hc;
  hc.maps = enumerate_maps(res.f0->complex(), b, config).maps;
  hc.edges = relation_edges(res, b, hc.maps);
  const auto n = hc.maps.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  Dsu dsu(n);
  for (const auto& e : hc.edges) {
    rel[e.from][e.to] = true;
    dsu.join(e.from, e.to);
  }
  for (std::size_t i = 0; i < n; ++i) {
    hc.reflexive = hc.reflexive && rel[i][i];
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      hc.symmetric = hc.symmetric && rel[j][i];
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[j][k] && !rel[i][k]) hc.transitive = false;
      }
    }
  }
  hc.class_of = dsu.labels(hc.classes);
  hc.representatives.assign(hc.classes, n);
  for (std::size_t i = n; i-- > 0;) hc.representatives[hc.class_of[i]] = i;
  return hc;
}

MappingSpace mapping_space(const Resolution& res, const Precat& b, int max_level,
                           const MapSearchConfig& config) {
  if (max_level < 0 || max_level > 2) throw ValidationError("mapping space levels are 0..2");
  if (!res.f0 || (max_level >= 1 && !res.f1) || (max_level >= 2 && !res.f2)) {
    throw ValidationError("mapping space needs the stages up to its top level");
  }
  MappingSpace ms;
  ms.levels = max_level + 1;
  ms.simplices.push_back(enumerate_maps(res.f0->complex(), b, config).maps);
  if (max_level >= 1) ms.simplices.push_back(enumerate_maps(res.f1->complex(), b, config).maps);
  if (max_level >= 2) ms.simplices.push_back(enumerate_maps(res.f2->complex(), b, config).maps);
  std::vector<std::map<std::vector<Elem>, std::size_t>> index;
  for (const auto& l : ms.simplices) index.push_back(index_of(l));

  auto lookup = [&](int level, const ComplexMap& m) {
    const auto it = index[level].find(m.images);
    if (it == index[level].end()) {
      throw ValidationError("precomposition left the enumerated maps at level " +
                            std::to_string(level));
    }
    return it->second;
  };
  // Precomposition with u: W -> evaluate(X), applied to every simplex on X.
  auto pull = [&](int to, const CellComplex& w, const ComplexMap& u, const ComplexEvaluation& x,
                  int from) {
    std::vector<std::size_t> out;
    for (const auto& m : ms.simplices[from]) out.push_back(lookup(to, then(w, u, x, b, m)));
    return out;
  };

  ms.faces.resize(ms.levels);
  ms.degeneracies.resize(ms.levels);
  if (max_level >= 1) {
    const auto& f0 = res.f0->complex();
    ms.faces[1].push_back(pull(0, f0, res.coface1, *res.f1, 1));
    ms.faces[1].push_back(pull(0, f0, res.coface0, *res.f1, 1));
    ms.degeneracies[0].push_back(pull(1, res.f1->complex(), res.degeneracy, *res.f0, 0));
  }
  if (max_level >= 2) {
    const int copy_of[3] = {1, 2, 0};
    for (int i = 0; i < 3; ++i) {
      ms.faces[2].push_back(pull(1, res.f1->complex(), f2_coface(res, copy_of[i]), *res.f2, 2));
    }
    for (int j = 0; j < 2; ++j) {
      ms.degeneracies[1].push_back(
          pull(2, res.f2->complex(), f2_codegeneracy(res, 1 - j), *res.f1, 1));
    }
  }

  auto fail = [&](const std::string& what) { ms.identity_failures.push_back(what); };
  const auto& d = ms.faces;
  const auto& s = ms.degeneracies;
  if (max_level >= 1) {
    for (std::size_t x = 0; x < ms.simplices[0].size(); ++x) {
      if (d[1][0][s[0][0][x]] != x || d[1][1][s[0][0][x]] != x) fail("d s0 != id at level 0");
    }
  }
  if (max_level >= 2) {
    for (std::size_t x = 0; x < ms.simplices[2].size(); ++x) {
      for (int j = 1; j < 3; ++j) {
        for (int i = 0; i < j; ++i) {
          if (d[1][i][d[2][j][x]] != d[1][j - 1][d[2][i][x]]) {
            fail("d" + std::to_string(i) + " d" + std::to_string(j) + " != d" +
                 std::to_string(j - 1) + " d" + std::to_string(i));
          }
        }
      }
    }
    for (std::size_t x = 0; x < ms.simplices[1].size(); ++x) {
      for (int j = 0; j < 2; ++j) {
        const auto y = s[1][j][x];
        if (d[2][j][y] != x || d[2][j + 1][y] != x) fail("d s" + std::to_string(j) + " != id");
      }
      if (d[2][0][s[1][1][x]] != s[0][0][d[1][0][x]]) fail("d0 s1 != s0 d0");
      if (d[2][2][s[1][0][x]] != s[0][0][d[1][1][x]]) fail("d2 s0 != s0 d1");
    }
    for (std::size_t x = 0; x < ms.simplices[0].size(); ++x) {
      if (s[1][0][s[0][0][x]] != s[1][1][s[0][0][x]]) fail("s0 s0 != s1 s0");
    }
  }

  Dsu dsu(ms.simplices[0].size());
  if (max_level >= 1) {
    for (std::size_t x = 0; x < ms.simplices[1].size(); ++x) dsu.join(d[1][0][x], d[1][1][x]);
  }
  ms.component_of = dsu.labels(ms.pi0);
  return ms;
}

ComplexMap map_of_functor(const Resolution& res, const FiniteCategory& a, const FiniteCategory& b,
                          const Precat& nerve_b, const std::vector<std::uint32_t>& objects,
                          const std::vector<std::uint32_t>& arrows) {
  const auto& sup = nerve_b.support();
  std::vector<std::map<std::string, Elem>> by_label(sup.size());
  for (ShapeId l = 0; l < sup.size(); ++l) {
    for (Elem e = 0; e < nerve_b.size(l); ++e) by_label[l][nerve_b.label(l, e)] = e;
  }
  ComplexMap out;
  const auto& w = res.f0->complex();
  for (std::uint32_t c = 0; c < w.size(); ++c) {
    const ShapeId l = w.cell(c).shape;
    const auto& label = res.base.label(l, res.f0_to_base.images[c]);
    std::string image;
    if (sup.shape(l).is_point()) {
      image = b.object_name(objects.at(*a.find_object(label)));
    } else {
      std::stringstream in(label);
      std::string part;
      while (std::getline(in, part, '|')) {
        const auto arrow = a.find_arrow(part);
        if (!arrow) throw ValidationError("unknown arrow " + part + " in a nerve label");
        image += (image.empty() ? "" : "|") + b.arrow(arrows.at(*arrow)).name;
      }
    }
    out.images.push_back(by_label[l].at(image));
  }
  return out;
}

Discrepancy compare_with_oracle(const SuiteEntry& entry, int degree_bound,
                                const ResolutionConfig& config) {
  Discrepancy out;
  out.a = entry.a_name;
  out.b = entry.b_name;
  auto stages = config;
  stages.build_f2 = false;
  auto res = resolve(nerve(entry.a, degree_bound), stages);
  out.fixpoint = res.fixpoint();
  const auto b = nerve(entry.b, degree_bound);
  const auto hc = hom_classes(res, b);
  const auto ho = oracle::ho_cat_hom(entry.a, entry.b);
  out.method = hc.classes;
  out.oracle = ho.count;
  out.agree = out.method == out.oracle;
  out.single_step_sufficient = hc.single_step_sufficient();
  out.maps = hc.maps.size();
  out.edges = hc.edges.size();

  const auto where = index_of(hc.maps);
  std::vector<ComplexMap> images;
  for (const auto& f : ho.functors) {
    images.push_back(map_of_functor(res, entry.a, entry.b, b, f.objects, f.arrows));
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;  // oracle class pairs
  for (std::size_t i = 0; i < ho.functors.size(); ++i) {
    for (std::size_t j = i + 1; j < ho.functors.size(); ++j) {
      const auto ci = ho.partition.class_of[i], cj = ho.partition.class_of[j];
      if (ci == cj || !seen.insert({ci, cj}).second) continue;
      const auto mi = where.at(images[i].images), mj = where.at(images[j].images);
      if (hc.class_of[mi] != hc.class_of[mj]) {
        seen.erase({ci, cj});
        continue;
      }
      Discrepancy::Witness wit{i, j, images[i], images[j], std::nullopt};
      for (const auto& e : hc.edges) {
        if (e.from == mi && e.to == mj) wit.direct = e.witness;
      }
      out.witnesses.push_back(std::move(wit));
    }
  }
  return out;
}

std::vector<Discrepancy> discrepancy_report(const std::vector<SuiteEntry>& suite,
                                            int degree_bound, const ResolutionConfig& config) {
  std::vector<Discrepancy> out;
  for (const auto& e : suite) out.push_back(compare_with_oracle(e, degree_bound, config));
  return out;
}

std::vector<SuiteEntry> named_suite(const std::string& name) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (name == "acceptance") {
    pairs = {{"arrow", "arrow"}, {"iso", "arrow"}, {"point", "arrow"}, {"point", "iso"}, {"point", "point"}};
  } else if (name == "discrepancy") {
    pairs = {{"arrow", "arrow"}, {"point", "retract"}, {"point", "point"}, {"arrow", "retract"},
             {"point", "z2"}};
  } else {
    throw ValidationError("unknown suite '" + name + "'");
  }
  std::vector<SuiteEntry> out;
  for (const auto& [a, b] : pairs) out.push_back({a, b, fixtures::by_name(a), fixtures::by_name(b)});
  return out;
}

}  // namespace hocalc
