#include "hocalc/resolution.hpp"

#include <map>

#include "hocalc/error.hpp"

namespace hocalc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ValidationError(what);
}

// i_k o s on one cell of F1, as an element of F1.
Elem through_f0(const Resolution& res, std::uint32_t c, int k) {
  const auto& f1 = *res.f1;
  const ShapeId l = f1.complex().cell(c).shape;
  return induced_image(*res.f0, f1.precat(), k == 0 ? res.coface0 : res.coface1, l,
                       res.degeneracy.images[c]);
}

ComplexMap through_f0_map(const Resolution& res, int k) {
  ComplexMap out;
  for (std::uint32_t c = 0; c < res.f1->complex().size(); ++c) {
    out.images.push_back(through_f0(res, c, k));
  }
  return out;
}

bool same_cells(const CellComplex& a, std::size_t offset, const CellComplex& b) {
  if (a.size() < offset + b.size()) return false;
  for (std::uint32_t c = 0; c < b.size(); ++c) {
    const auto& x = a.cell(offset + c);
    const auto& y = b.cell(c);
    if (x.shape != y.shape || x.attachment.size() != y.attachment.size()) return false;
    for (std::size_t i = 0; i < y.attachment.size(); ++i) {
      if (x.attachment[i] != ElementRef{y.attachment[i].cell + static_cast<std::uint32_t>(offset),
                                        y.attachment[i].interior}) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool Resolution::fixpoint() const {
  bool ok = f0_report.fixpoint;
  if (f1) ok = ok && f1_report.fixpoint;
  if (f2) ok = ok && f2_report.fixpoint;
  return ok;
}

Resolution build_f0(const Precat& a, const ResolutionConfig& config) {
  Resolution res{a, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  CellComplex empty(BoundaryStructure::make(a.support_ptr(), config.mode));
  auto c = small_way(empty, a, ComplexMap{}, CompletionConfig{config.pass_limit});
  res.f0.emplace(std::move(c.evaluation));
  res.f0_to_base = std::move(c.map);
  res.f0_report = std::move(c.report);
  return res;
}

void build_f1(Resolution& res, const ResolutionConfig& config) {
  require(res.f0.has_value(), "F1 needs F0");
  const auto& f0 = *res.f0;
  auto u = disjoint_union(f0.complex(), f0.complex());
  auto c = small_way(u, f0.precat(), fold_map(f0), CompletionConfig{config.pass_limit});
  res.f1.emplace(std::move(c.evaluation));
  res.degeneracy = std::move(c.map);
  res.f1_report = std::move(c.report);
  res.coface0 = copy_inclusion(*res.f1, f0.complex().size(), 0);
  res.coface1 = copy_inclusion(*res.f1, f0.complex().size(), 1);
}

void build_latch2(Resolution& res) {
  require(res.f1.has_value(), "the latching object needs F1");
  const auto& f1 = *res.f1;
  const auto& w = f1.complex();
  const auto k = static_cast<std::uint32_t>(res.f0_size());
  const auto n = static_cast<std::uint32_t>(w.size());

  std::vector<std::optional<std::uint32_t>> second(n), third(n);
  for (std::uint32_t c = 0; c < k; ++c) second[c] = k + c;  // X1
  auto ab = glue(w, w, second);
  for (std::uint32_t c = 0; c < k; ++c) {
    third[c] = c;                             // X0
    third[k + c] = ab.placement[k + c];       // X2
  }
  auto abc = glue(ab.complex, w, third);
  std::vector<std::uint32_t> first(n);
  for (std::uint32_t c = 0; c < n; ++c) first[c] = c;
  res.latch_placement = {first, ab.placement, abc.placement};
  res.latch = std::move(abc.complex);

  const auto s = induced_map(f1, res.f0->precat(), res.degeneracy);
  res.fiber = pullback(f1.precat(), f1.precat(), s, s);
  const auto& fib = *res.fiber;
  const auto& sup = f1.support();
  std::vector<std::map<std::pair<Elem, Elem>, Elem>> pairs(sup.size());
  for (ShapeId l = 0; l < sup.size(); ++l) {
    for (Elem e = 0; e < fib.object.size(l); ++e) pairs[l][{fib.first.levels[l][e], fib.second.levels[l][e]}] = e;
  }

  res.latch_to_fiber.images.assign(res.latch->size(), Precat::kUnset);
  for (int copy = 0; copy < 3; ++copy) {
    for (std::uint32_t c = 0; c < n; ++c) {
      const Elem self = f1.cell_element(c);
      const Elem p1 = copy == 1 ? through_f0(res, c, 1) : self;
      const Elem p2 = copy == 0 ? through_f0(res, c, 0) : self;
      const auto it = pairs[w.cell(c).shape].find({p1, p2});
      require(it != pairs[w.cell(c).shape].end(), "latching map leaves the fiber product");
      auto& slot = res.latch_to_fiber.images[res.latch_placement[copy][c]];
      require(slot == Precat::kUnset || slot == it->second, "glued copies disagree on the projections");
      slot = it->second;
    }
  }
}

void build_f2(Resolution& res, const ResolutionConfig& config) {
  require(res.latch.has_value(), "F2 needs the latching object");
  auto c = small_way(*res.latch, res.fiber->object, res.latch_to_fiber,
                     CompletionConfig{config.pass_limit});
  res.f2.emplace(std::move(c.evaluation));
  res.f2_to_fiber = std::move(c.map);
  res.f2_report = std::move(c.report);
}

Resolution resolve(const Precat& a, const ResolutionConfig& config) {
  auto res = build_f0(a, config);
  build_f1(res, config);
  if (config.build_f2) {
    build_latch2(res);
    build_f2(res, config);
  }
  return res;
}

ComplexMap f2_coface(const Resolution& res, int copy) {
  require(res.f2.has_value(), "F2 has not been built");
  ComplexMap out;
  for (auto c : res.latch_placement.at(copy)) out.images.push_back(res.f2->cell_element(c));
  return out;
}

ComplexMap f2_codegeneracy(const Resolution& res, int projection) {
  require(res.f2.has_value(), "F2 has not been built");
  const auto& fib = *res.fiber;
  const auto& proj = projection == 0 ? fib.first : fib.second;
  ComplexMap out;
  const auto& w = res.f2->complex();
  for (std::uint32_t c = 0; c < w.size(); ++c) {
    out.images.push_back(proj.levels[w.cell(c).shape][res.f2_to_fiber.images[c]]);
  }
  return out;
}

std::vector<std::string> check_structure(const Resolution& res) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  auto valid = [&](const CellComplex& w, const Precat& t, const ComplexMap& f, const std::string& what) {
    if (auto err = check_complex_map(w, t, f)) failures.push_back(what + ": " + *err);
  };
  if (!res.f0) return {"F0 has not been built"};
  const auto& f0 = *res.f0;
  valid(f0.complex(), res.base, res.f0_to_base, "F0 -> A");
  if (!res.f1) return failures;
  const auto& f1 = *res.f1;
  const auto k = f0.complex().size();
  expect(same_cells(f1.complex(), 0, f0.complex()) && same_cells(f1.complex(), k, f0.complex()),
         "F0 + F0 is not a prefix of F1");
  valid(f0.complex(), f1.precat(), res.coface0, "first coface");
  valid(f0.complex(), f1.precat(), res.coface1, "second coface");
  valid(f1.complex(), f0.precat(), res.degeneracy, "degeneracy");
  const auto id0 = identity_map(f0);
  for (int i = 0; i < 2; ++i) {
    const auto& d = i == 0 ? res.coface0 : res.coface1;
    expect(then(f0.complex(), d, f1, f0.precat(), res.degeneracy) == id0,
           "degeneracy o coface " + std::to_string(i) + " is not the identity");
  }
  if (!res.latch) return failures;
  const auto n = f1.complex().size();
  expect(res.latch->size() == 3 * n - 3 * k, "latching object has the wrong cell count");
  valid(*res.latch, res.fiber->object, res.latch_to_fiber, "latching map");
  for (int copy = 0; copy < 3; ++copy) {
    for (std::uint32_t c = 0; c < n; ++c) {
      const ShapeId l = f1.complex().cell(c).shape;
      const Elem e = res.latch_to_fiber.images[res.latch_placement[copy][c]];
      const Elem self = f1.cell_element(c);
      expect(res.fiber->first.levels[l][e] == (copy == 1 ? through_f0(res, c, 1) : self) &&
                 res.fiber->second.levels[l][e] == (copy == 0 ? through_f0(res, c, 0) : self),
             "projection formula fails on copy " + std::to_string(copy));
    }
  }
  if (!res.f2) return failures;
  const auto& f2 = *res.f2;
  expect(same_cells(f2.complex(), 0, *res.latch), "the latching object is not a prefix of F2");
  valid(f2.complex(), res.fiber->object, res.f2_to_fiber, "F2 -> F1 x_F0 F1");
  // Cosimplicial names: d0, d1, d2 are the copies joining X1X2, X0X2, X0X1;
  // F0 -> F1 has d0 = second coface, d1 = first; s0, s1 are the second and
  // first projections.
  const int copy_of[3] = {1, 2, 0};
  const auto id1 = identity_map(f1);
  std::vector<ComplexMap> d, s;
  for (int i = 0; i < 3; ++i) {
    d.push_back(f2_coface(res, copy_of[i]));
    valid(f1.complex(), f2.precat(), d.back(), "F1 -> F2 coface");
  }
  for (int j = 0; j < 2; ++j) {
    s.push_back(f2_codegeneracy(res, 1 - j));
    valid(f2.complex(), f1.precat(), s.back(), "F2 -> F1 codegeneracy");
  }
  auto sd = [&](int j, int i) { return then(f1.complex(), d[i], f2, f1.precat(), s[j]); };
  expect(sd(0, 0) == id1 && sd(0, 1) == id1 && sd(1, 1) == id1 && sd(1, 2) == id1,
         "codegeneracy o coface is not the identity");
  expect(sd(0, 2) == through_f0_map(res, 0), "s0 d2 differs from d1 s0");
  expect(sd(1, 0) == through_f0_map(res, 1), "s1 d0 differs from d0 s0");
  const ComplexMap* low[2] = {&res.coface1, &res.coface0};
  auto dd = [&](int j, int i) { return then(f0.complex(), *low[i], f1, f2.precat(), d[j]); };
  for (int j = 1; j < 3; ++j) {
    for (int i = 0; i < j; ++i) {
      expect(dd(j, i) == dd(i, j - 1), "coface identity d" + std::to_string(j) + " d" +
                                           std::to_string(i) + " fails");
    }
  }
  return failures;
}

}  // namespace hocalc
