#include "hocalc/complex.hpp"

#include <sstream>

#include "hocalc/error.hpp"

namespace hocalc {

CellComplex::CellComplex(std::shared_ptr<const BoundaryStructure> boundary)
    : boundary_(std::move(boundary)) {}

std::vector<std::size_t> CellComplex::census() const {
  std::vector<std::size_t> out(support().size(), 0);
  for (const auto& c : cells_) ++out[c.shape];
  return out;
}

ComplexEvaluation::ComplexEvaluation(std::shared_ptr<const BoundaryStructure> boundary)
    : complex_(boundary), precat_(boundary->support_ptr()), origin_(boundary->support().size()) {}

ComplexEvaluation::ComplexEvaluation(const CellComplex& w)
    : ComplexEvaluation(w.boundary_ptr()) {
  for (const auto& c : w.cells()) attach(c);
}

void ComplexEvaluation::check_cell(const Cell& cell) const {
  const auto& sup = support();
  const auto& bs = boundary();
  const auto index = std::to_string(complex_.size());
  if (cell.shape >= sup.size()) throw ValidationError("cell " + index + ": shape out of support");
  const auto& faces = bs.faces(cell.shape);
  if (cell.attachment.size() != faces.size()) {
    throw ValidationError("cell " + index + " of shape " + sup.shape(cell.shape).str() + " needs " +
                          std::to_string(faces.size()) + " attached elements, got " +
                          std::to_string(cell.attachment.size()));
  }
  if (faces.empty()) return;
  const ShapeId f = *bs.face_source(cell.shape);
  for (const auto& ref : cell.attachment) {
    if (ref.cell >= complex_.size()) {
      throw ValidationError("cell " + index + " attaches to a later or missing cell " +
                            std::to_string(ref.cell));
    }
    const ShapeId target = complex_.cell(ref.cell).shape;
    if (ref.interior >= sup.hom(f, target).size() || bs.in_boundary(f, target, ref.interior)) {
      throw ValidationError("cell " + index + " attaches along a non-normal element of cell " +
                            std::to_string(ref.cell));
    }
  }
  for (const auto& o : bs.overlaps(cell.shape)) {
    const Elem x = precat_.restrict(o.level, f, o.left, element(f, cell.attachment[o.i]));
    const Elem y = precat_.restrict(o.level, f, o.right, element(f, cell.attachment[o.j]));
    if (x != y) {
      throw ValidationError("cell " + index + ": attached elements " + std::to_string(o.i) +
                            " and " + std::to_string(o.j) + " disagree on the boundary at level " +
                            sup.shape(o.level).str());
    }
  }
}

std::uint32_t ComplexEvaluation::attach(Cell cell) {
  check_cell(cell);
  const auto& sup = support();
  const auto& bs = boundary();
  const std::size_t s = sup.size();
  const auto c = static_cast<std::uint32_t>(complex_.size());
  const ShapeId m = cell.shape;
  std::vector<Elem> att;
  if (bs.face_source(m)) {
    for (const auto& ref : cell.attachment) att.push_back(element(*bs.face_source(m), ref));
  }
  const std::string base = cell.label.empty() ? "c" + std::to_string(c) : cell.label;
  complex_.push_back(std::move(cell));

  auto& off = offset_.emplace_back(s);
  for (ShapeId l = 0; l < s; ++l) {
    off[l] = static_cast<Elem>(precat_.size(l));
    for (MorId a : bs.interior(l, m)) {
      const bool top = l == m && a == sup.identity(m);
      precat_.add_element(l, top ? base : base + "." + sup.hom(l, m)[a].str());
      origin_[l].push_back(ElementRef{c, a});
    }
  }
  for (ShapeId l = 0; l < s; ++l) {
    const auto& inner = bs.interior(l, m);
    for (std::size_t pos = 0; pos < inner.size(); ++pos) {
      const Elem x = off[l] + static_cast<Elem>(pos);
      for (ShapeId n = 0; n < s; ++n) {
        const auto& gs = sup.hom(n, l);
        for (MorId g = 0; g < gs.size(); ++g) {
          const MorId b = sup.compose(n, l, m, g, inner[pos]);
          const int ip = bs.interior_position(n, m, b);
          Elem y;
          if (ip >= 0) {
            y = off[n] + static_cast<Elem>(ip);
          } else {
            const auto ff = bs.factor(n, m, b);
            y = precat_.restrict(n, *bs.face_source(m), ff.through, att[ff.face]);
          }
          precat_.set_restriction(n, l, g, x, y);
        }
      }
    }
  }
  return c;
}

Elem ComplexEvaluation::element(ShapeId level, ElementRef ref) const {
  const ShapeId m = complex_.cell(ref.cell).shape;
  const int pos = boundary().interior_position(level, m, ref.interior);
  if (pos < 0) throw ValidationError("element reference is not in normal form");
  return offset_[ref.cell][level] + static_cast<Elem>(pos);
}

Elem ComplexEvaluation::cell_element(std::uint32_t c) const {
  const ShapeId m = complex_.cell(c).shape;
  return element(m, ElementRef{c, support().identity(m)});
}

Elem ComplexEvaluation::attachment_element(std::uint32_t c, std::uint32_t i) const {
  const auto& cell = complex_.cell(c);
  return element(*boundary().face_source(cell.shape), cell.attachment[i]);
}

CellComplex attach_cell(const CellComplex& w, const Cell& c) {
  ComplexEvaluation e(w);
  e.attach(c);
  return e.complex();
}

Elem image_of(const CellComplex& w, const Precat& target, const ComplexMap& f, ShapeId level,
              ElementRef ref) {
  return target.restrict(level, w.cell(ref.cell).shape, ref.interior, f.images[ref.cell]);
}

std::optional<std::string> check_complex_map(const CellComplex& w, const Precat& target,
                                             const ComplexMap& f) {
  if (f.images.size() != w.size()) return "map has the wrong number of cell images";
  const auto& bs = w.boundary();
  for (std::uint32_t c = 0; c < w.size(); ++c) {
    const auto& cell = w.cell(c);
    if (f.images[c] >= target.size(cell.shape)) {
      return "image of cell " + std::to_string(c) + " is out of range";
    }
    const auto& faces = bs.faces(cell.shape);
    for (std::uint32_t i = 0; i < faces.size(); ++i) {
      const ShapeId fs = *bs.face_source(cell.shape);
      if (target.restrict(fs, cell.shape, faces[i], f.images[c]) !=
          image_of(w, target, f, fs, cell.attachment[i])) {
        return "cell " + std::to_string(c) + " violates its face condition " + std::to_string(i);
      }
    }
  }
  return std::nullopt;
}

Elem induced_image(const ComplexEvaluation& w, const Precat& target, const ComplexMap& f,
                   ShapeId level, Elem x) {
  return image_of(w.complex(), target, f, level, w.origin(level, x));
}

PrecatMap induced_map(const ComplexEvaluation& w, const Precat& target, const ComplexMap& f) {
  PrecatMap out;
  const auto& p = w.precat();
  out.levels.resize(p.support().size());
  for (ShapeId l = 0; l < p.support().size(); ++l) {
    out.levels[l].reserve(p.size(l));
    for (Elem x = 0; x < p.size(l); ++x) out.levels[l].push_back(induced_image(w, target, f, l, x));
  }
  return out;
}

ComplexMap then(const CellComplex& w, const ComplexMap& f, const ComplexEvaluation& middle,
                const Precat& target, const ComplexMap& g) {
  ComplexMap out;
  out.images.reserve(f.images.size());
  for (std::uint32_t c = 0; c < w.size(); ++c) {
    out.images.push_back(induced_image(middle, target, g, w.cell(c).shape, f.images[c]));
  }
  return out;
}

ComplexMap then(const ComplexMap& f, const PrecatMap& g, const CellComplex& w) {
  ComplexMap out;
  out.images.reserve(f.images.size());
  for (std::uint32_t c = 0; c < w.size(); ++c) out.images.push_back(g(w.cell(c).shape, f.images[c]));
  return out;
}

ComplexMap identity_map(const ComplexEvaluation& w) {
  ComplexMap out;
  for (std::uint32_t c = 0; c < w.complex().size(); ++c) out.images.push_back(w.cell_element(c));
  return out;
}

CellComplex disjoint_union(const CellComplex& a, const CellComplex& b) {
  if (a.boundary_ptr() != b.boundary_ptr()) {
    throw ValidationError("disjoint union of complexes with different bounds");
  }
  CellComplex out = a;
  const auto shift = static_cast<std::uint32_t>(a.size());
  for (auto cell : b.cells()) {
    for (auto& ref : cell.attachment) ref.cell += shift;
    out.push_back(std::move(cell));
  }
  return out;
}

ComplexMap fold_map(const ComplexEvaluation& w) {
  ComplexMap out = identity_map(w);
  const auto n = out.images.size();
  for (std::size_t c = 0; c < n; ++c) out.images.push_back(out.images[c]);
  return out;
}

ComplexMap copy_inclusion(const ComplexEvaluation& target, std::size_t copy_size, int copy) {
  ComplexMap out;
  for (std::size_t c = 0; c < copy_size; ++c) {
    out.images.push_back(target.cell_element(static_cast<std::uint32_t>(c + copy * copy_size)));
  }
  return out;
}

GlueResult glue(const CellComplex& a, const CellComplex& b,
                const std::vector<std::optional<std::uint32_t>>& identification) {
  if (a.boundary_ptr() != b.boundary_ptr()) throw ValidationError("glue across different bounds");
  if (identification.size() != b.size()) {
    throw ValidationError("identification must cover every cell of the second complex");
  }
  GlueResult out{a, {}};
  out.placement.resize(b.size());
  for (std::uint32_t c = 0; c < b.size(); ++c) {
    const auto& cell = b.cell(c);
    if (identification[c]) {
      const auto target = *identification[c];
      if (target >= a.size()) throw ValidationError("identification points outside the first complex");
      const auto& other = a.cell(target);
      if (other.shape != cell.shape || other.attachment.size() != cell.attachment.size()) {
        throw ValidationError("identified cells " + std::to_string(c) + " and " +
                              std::to_string(target) + " have different shapes");
      }
      for (std::size_t i = 0; i < cell.attachment.size(); ++i) {
        const auto& ref = cell.attachment[i];
        if (!identification[ref.cell]) {
          throw ValidationError("identified cells do not form a subcomplex: cell " +
                                std::to_string(c) + " attaches to unidentified cell " +
                                std::to_string(ref.cell));
        }
        if (ElementRef{*identification[ref.cell], ref.interior} != other.attachment[i]) {
          throw ValidationError("identified cells " + std::to_string(c) + " and " +
                                std::to_string(target) + " are attached differently");
        }
      }
      out.placement[c] = target;
    } else {
      Cell copy = cell;
      for (auto& ref : copy.attachment) ref.cell = out.placement[ref.cell];
      out.placement[c] = static_cast<std::uint32_t>(out.complex.size());
      out.complex.push_back(std::move(copy));
    }
  }
  return out;
}

namespace {

struct BoundaryBuild {
  CellComplex complex;
  ComplexMap images;                // into h(M)
  std::vector<std::uint32_t> top;  // cells realizing the faces of M
};

BoundaryBuild build_boundary(const std::shared_ptr<const BoundaryStructure>& bs, ShapeId m) {
  const auto& sup = bs->support();
  BoundaryBuild out{CellComplex(bs), {}, {}};
  const auto& shape = sup.shape(m);
  if (shape.is_point()) return out;
  const ShapeId h = *bs->face_source(m);
  const auto& faces = bs->faces(m);
  if (!sup.shape(h).is_point()) {
    auto inner = build_boundary(bs, h);
    out.complex = std::move(inner.complex);
    for (std::uint32_t c = 0; c < out.complex.size(); ++c) {
      out.images.images.push_back(
          sup.compose(out.complex.cell(c).shape, h, m, inner.images.images[c], faces[0]));
    }
    std::vector<ElementRef> att;
    const ShapeId hh = *bs->face_source(h);
    for (auto c : inner.top) att.push_back(ElementRef{c, sup.identity(hh)});
    for (std::size_t i = 0; i < faces.size(); ++i) {
      out.top.push_back(static_cast<std::uint32_t>(out.complex.size()));
      out.complex.push_back(Cell{h, att, "face" + std::to_string(i)});
      out.images.images.push_back(faces[i]);
    }
  } else {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      out.top.push_back(static_cast<std::uint32_t>(out.complex.size()));
      out.complex.push_back(Cell{h, {}, "v" + std::to_string(i)});
      out.images.images.push_back(faces[i]);
    }
  }
  return out;
}

}  // namespace

BoundaryComplex boundary_complex(std::shared_ptr<const BoundaryStructure> boundary,
                                 const ThetaShape& m) {
  if (boundary->mode() != BoundaryMode::free) {
    throw ValidationError("boundary_complex is defined for the free boundary");
  }
  auto b = build_boundary(boundary, boundary->support().id(m));
  return BoundaryComplex{std::move(b.complex), std::move(b.images)};
}

BoundaryComplex representable_complex(std::shared_ptr<const BoundaryStructure> boundary,
                                      const ThetaShape& m) {
  if (boundary->mode() != BoundaryMode::free) {
    throw ValidationError("representable_complex is defined for the free boundary");
  }
  const auto& sup = boundary->support();
  const ShapeId id = sup.id(m);
  auto b = build_boundary(boundary, id);
  std::vector<ElementRef> att;
  if (!m.is_point()) {
    const ShapeId h = *boundary->face_source(id);
    for (auto c : b.top) att.push_back(ElementRef{c, sup.identity(h)});
  }
  b.complex.push_back(Cell{id, att, "top"});
  b.images.images.push_back(sup.identity(id));
  return BoundaryComplex{std::move(b.complex), std::move(b.images)};
}

}  // namespace hocalc
