#include "hocalc/lifting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hocalc/error.hpp"

namespace hocalc {

namespace {

// Overlaps of M grouped by their larger face index.
std::vector<std::vector<BoundaryStructure::Overlap>> overlaps_by_face(const BoundaryStructure& bs,
                                                                      ShapeId m) {
  std::vector<std::vector<BoundaryStructure::Overlap>> out(bs.faces(m).size());
  for (const auto& o : bs.overlaps(m)) out[o.j].push_back(o);
  return out;
}

bool agrees(const Precat& x, ShapeId f, const std::vector<BoundaryStructure::Overlap>& os,
            const std::vector<Elem>& chosen, Elem w) {
  for (const auto& o : os) {
    if (x.restrict(o.level, f, o.left, chosen[o.i]) != x.restrict(o.level, f, o.right, w)) {
      return false;
    }
  }
  return true;
}

// Backtracking over per-face candidate lists.
void extend_tuples(const Precat& x, ShapeId f,
                   const std::vector<std::vector<BoundaryStructure::Overlap>>& os,
                   const std::vector<const std::vector<Elem>*>& candidates,
                   std::vector<Elem>& chosen, std::vector<std::vector<Elem>>& out) {
  const std::size_t j = chosen.size();
  if (j == candidates.size()) {
    out.push_back(chosen);
    return;
  }
  for (Elem w : *candidates[j]) {
    if (!agrees(x, f, os[j], chosen, w)) continue;
    chosen.push_back(w);
    extend_tuples(x, f, os, candidates, chosen, out);
    chosen.pop_back();
  }
}

std::vector<Elem> lift_key(const Precat& w, const BoundaryStructure& bs, ShapeId m, Elem x,
                           Elem image) {
  auto key = face_restrictions(w, bs, m, x);
  key.push_back(image);
  return key;
}

}  // namespace

std::vector<Elem> face_restrictions(const Precat& x, const BoundaryStructure& bs, ShapeId m,
                                    Elem e) {
  std::vector<Elem> out;
  const auto f = bs.face_source(m);
  if (!f) return out;
  for (MorId face : bs.faces(m)) out.push_back(x.restrict(*f, m, face, e));
  return out;
}

void check_square(const LiftingContext& ctx, const LiftSquare& sq) {
  const auto& sup = ctx.source.support();
  if (sq.shape >= sup.size()) throw ValidationError("square shape out of support");
  if (sq.base >= ctx.target.size(sq.shape)) throw ValidationError("square base out of range");
  const auto& faces = ctx.boundary.faces(sq.shape);
  if (sq.boundary.size() != faces.size()) {
    throw ValidationError("square on " + sup.shape(sq.shape).str() + " needs " +
                          std::to_string(faces.size()) + " boundary elements");
  }
  if (faces.empty()) return;
  const ShapeId f = *ctx.boundary.face_source(sq.shape);
  for (Elem w : sq.boundary) {
    if (w >= ctx.source.size(f)) throw ValidationError("square boundary element out of range");
  }
  for (const auto& o : ctx.boundary.overlaps(sq.shape)) {
    if (ctx.source.restrict(o.level, f, o.left, sq.boundary[o.i]) !=
        ctx.source.restrict(o.level, f, o.right, sq.boundary[o.j])) {
      throw ValidationError("square boundary elements disagree on an overlap");
    }
  }
  const auto want = face_restrictions(ctx.target, ctx.boundary, sq.shape, sq.base);
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (ctx.map(f, sq.boundary[i]) != want[i]) {
      throw ValidationError("square does not commute at face " + std::to_string(i));
    }
  }
}

std::optional<Elem> find_lift(const LiftingContext& ctx, const LiftSquare& sq) {
  check_square(ctx, sq);
  for (Elem w = 0; w < ctx.source.size(sq.shape); ++w) {
    if (ctx.map(sq.shape, w) != sq.base) continue;
    if (face_restrictions(ctx.source, ctx.boundary, sq.shape, w) == sq.boundary) return w;
  }
  return std::nullopt;
}

std::vector<std::vector<Elem>> boundary_tuples(const Precat& x, const BoundaryStructure& bs,
                                               ShapeId m) {
  std::vector<std::vector<Elem>> out;
  const auto f = bs.face_source(m);
  if (!f) {
    out.emplace_back();
    return out;
  }
  std::vector<Elem> all(x.size(*f));
  std::iota(all.begin(), all.end(), Elem{0});
  const std::vector<const std::vector<Elem>*> candidates(bs.faces(m).size(), &all);
  std::vector<Elem> chosen;
  extend_tuples(x, *f, overlaps_by_face(bs, m), candidates, chosen, out);
  return out;
}

std::vector<LiftSquare> enumerate_squares(const LiftingContext& ctx, ShapeId m) {
  std::vector<LiftSquare> out;
  const auto f = ctx.boundary.face_source(m);
  if (!f) {
    for (Elem v = 0; v < ctx.target.size(m); ++v) out.push_back(LiftSquare{m, {}, v});
    return out;
  }
  std::vector<std::vector<Elem>> preimage(ctx.target.size(*f));
  for (Elem w = 0; w < ctx.source.size(*f); ++w) preimage[ctx.map(*f, w)].push_back(w);
  const auto os = overlaps_by_face(ctx.boundary, m);
  for (Elem v = 0; v < ctx.target.size(m); ++v) {
    const auto faces = face_restrictions(ctx.target, ctx.boundary, m, v);
    std::vector<const std::vector<Elem>*> candidates;
    bool empty = false;
    for (Elem t : faces) {
      candidates.push_back(&preimage[t]);
      empty = empty || preimage[t].empty();
    }
    if (empty) continue;
    std::vector<std::vector<Elem>> tuples;
    std::vector<Elem> chosen;
    extend_tuples(ctx.source, *f, os, candidates, chosen, tuples);
    for (auto& t : tuples) out.push_back(LiftSquare{m, std::move(t), v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

LiftingVerdict satisfies_lifting(const LiftingContext& ctx) {
  LiftingVerdict out;
  const auto& sup = ctx.source.support();
  for (ShapeId m = 0; m < sup.size(); ++m) {
    std::map<std::vector<Elem>, Elem> lifts;
    for (Elem w = 0; w < ctx.source.size(m); ++w) {
      lifts.emplace(lift_key(ctx.source, ctx.boundary, m, w, ctx.map(m, w)), w);
    }
    for (const auto& sq : enumerate_squares(ctx, m)) {
      ++out.squares;
      auto key = sq.boundary;
      key.push_back(sq.base);
      if (!lifts.count(key) && out.ok) {
        out.ok = false;
        out.witness = sq;
      }
    }
  }
  return out;
}

std::size_t CompletionReport::total_added() const {
  std::size_t n = 0;
  for (const auto& pass : added) n += std::accumulate(pass.begin(), pass.end(), std::size_t{0});
  return n;
}

Completion small_way(const CellComplex& u, const Precat& v, const ComplexMap& g,
                     const CompletionConfig& config) {
  if (config.pass_limit < 1) throw ValidationError("pass limit must be at least 1");
  if (u.support().n() != v.n() || u.support().degree_bound() != v.degree_bound()) {
    throw ValidationError("complex and target have different bounds");
  }
  if (auto err = check_complex_map(u, v, g)) throw ValidationError(*err);
  const auto& bs = u.boundary();
  const auto& sup = bs.support();

  Completion out{ComplexEvaluation(u), g, {}, {}};
  auto& eval = out.evaluation;
  out.induced = induced_map(eval, v, g);
  auto& report = out.report;
  report.pass_limit = config.pass_limit;
  report.initial_cells = u.size();
  for (const auto& s : sup.shapes()) report.shapes.push_back(s.str());

  auto extend_induced = [&](std::uint32_t c) {
    for (ShapeId l = 0; l < sup.size(); ++l) {
      auto& level = out.induced.levels[l];
      for (Elem x = static_cast<Elem>(level.size()); x < eval.precat().size(l); ++x) {
        const auto ref = eval.origin(l, x);
        level.push_back(v.restrict(l, eval.complex().cell(ref.cell).shape, ref.interior,
                                   out.map.images[c]));
      }
    }
  };

  for (int pass = 0; pass < config.pass_limit; ++pass) {
    auto& added = report.added.emplace_back(sup.size(), 0);
    std::size_t scanned = 0;
    for (ShapeId m = 0; m < sup.size(); ++m) {
      // Squares of shape M only see W at face_source(M), which cells of
      // shape M do not touch; the list is fixed while M is processed.
      const LiftingContext ctx{eval.precat(), v, out.induced, bs};
      const auto squares = enumerate_squares(ctx, m);
      scanned += squares.size();
      std::map<std::vector<Elem>, Elem> lifts;
      for (Elem w = 0; w < eval.precat().size(m); ++w) {
        lifts.emplace(lift_key(eval.precat(), bs, m, w, out.induced(m, w)), w);
      }
      for (const auto& sq : squares) {
        auto key = sq.boundary;
        key.push_back(sq.base);
        if (lifts.count(key)) continue;
        Cell cell{m, {}, ""};
        if (const auto f = bs.face_source(m)) {
          for (Elem w : sq.boundary) cell.attachment.push_back(eval.origin(*f, w));
        }
        const Elem first = static_cast<Elem>(eval.precat().size(m));
        const auto c = eval.attach(std::move(cell));
        out.map.images.push_back(sq.base);
        extend_induced(c);
        for (Elem w = first; w < eval.precat().size(m); ++w) {
          lifts.emplace(lift_key(eval.precat(), bs, m, w, out.induced(m, w)), w);
        }
        ++added[m];
      }
    }
    ++report.passes;
    report.squares.push_back(scanned);
    report.cells.push_back(eval.complex().size());
    std::size_t total = 0;
    for (auto n : eval.precat().level_sizes()) total += n;
    report.elements.push_back(total);
    if (std::accumulate(added.begin(), added.end(), std::size_t{0}) == 0) {
      report.fixpoint = true;
      break;
    }
  }
  return out;
}

}  // namespace hocalc
