#pragma once

// Cell complexes: n-precats presented as sequences of pushouts along
// boundary inclusions, and their levelwise evaluation.
//
// An element of the evaluation at level N has a unique normal form
// (cell c, interior morphism a: N -> shape(c)). Restricting (c, a) along g
// either stays interior or hits the boundary of c, in which case it is
// resolved through c's attachment.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hocalc/precat.hpp"
#include "hocalc/support.hpp"

namespace hocalc {

struct ElementRef {
  std::uint32_t cell;
  MorId interior;  // index into hom(level, shape(cell)), must be interior

  auto operator<=>(const ElementRef&) const = default;
};

struct Cell {
  ShapeId shape;
  // One element per face of the shape, living at level face_source(shape).
  std::vector<ElementRef> attachment;
  std::string label;
};

class CellComplex {
 public:
  explicit CellComplex(std::shared_ptr<const BoundaryStructure> boundary);

  const BoundaryStructure& boundary() const { return *boundary_; }
  const std::shared_ptr<const BoundaryStructure>& boundary_ptr() const { return boundary_; }
  const ThetaSupport& support() const { return boundary_->support(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(std::uint32_t c) const { return cells_[c]; }
  std::size_t size() const { return cells_.size(); }

  // Cell counts per support shape.
  std::vector<std::size_t> census() const;

  // No validation; ComplexEvaluation::attach is the checked path.
  void push_back(Cell c) { cells_.push_back(std::move(c)); }

 private:
  std::shared_ptr<const BoundaryStructure> boundary_;
  std::vector<Cell> cells_;
};

// Incrementally maintained evaluation of a cell complex.
class ComplexEvaluation {
 public:
  explicit ComplexEvaluation(std::shared_ptr<const BoundaryStructure> boundary);
  explicit ComplexEvaluation(const CellComplex& w);

  // Validates prefix-validity and boundary compatibility, appends the cell
  // and extends every level. Returns the new cell index.
  std::uint32_t attach(Cell cell);
  // Throws ValidationError describing why the cell cannot be attached.
  void check_cell(const Cell& cell) const;

  const CellComplex& complex() const { return complex_; }
  const Precat& precat() const { return precat_; }
  const BoundaryStructure& boundary() const { return complex_.boundary(); }
  const ThetaSupport& support() const { return complex_.support(); }

  Elem element(ShapeId level, ElementRef ref) const;
  ElementRef origin(ShapeId level, Elem x) const { return origin_[level][x]; }
  // The element (c, identity) at level shape(c).
  Elem cell_element(std::uint32_t c) const;
  // Element of the attachment of cell c along face i.
  Elem attachment_element(std::uint32_t c, std::uint32_t i) const;

 private:
  CellComplex complex_;
  Precat precat_;
  std::vector<std::vector<ElementRef>> origin_;  // [level][elem]
  std::vector<std::vector<Elem>> offset_;        // [cell][level]
};

inline ComplexEvaluation evaluate(const CellComplex& w) { return ComplexEvaluation(w); }

// Appends c to W after validating it against the evaluation of W.
CellComplex attach_cell(const CellComplex& w, const Cell& c);

// A map out of a complex: one target element per cell, at level shape(c).
struct ComplexMap {
  std::vector<Elem> images;

  bool operator==(const ComplexMap&) const = default;
};

// Image of an element given in normal form.
Elem image_of(const CellComplex& w, const Precat& target, const ComplexMap& f, ShapeId level,
              ElementRef ref);
// Face conditions for every cell.
std::optional<std::string> check_complex_map(const CellComplex& w, const Precat& target,
                                             const ComplexMap& f);
// The induced natural transformation evaluate(W) -> target.
PrecatMap induced_map(const ComplexEvaluation& w, const Precat& target, const ComplexMap& f);
// Image of one evaluation element.
Elem induced_image(const ComplexEvaluation& w, const Precat& target, const ComplexMap& f,
                   ShapeId level, Elem x);
// f: W -> evaluate(X) followed by g: X -> target.
ComplexMap then(const CellComplex& w, const ComplexMap& f, const ComplexEvaluation& middle,
                const Precat& target, const ComplexMap& g);
ComplexMap then(const ComplexMap& f, const PrecatMap& g, const CellComplex& w);

// Identity of W as a map into its own evaluation.
ComplexMap identity_map(const ComplexEvaluation& w);

CellComplex disjoint_union(const CellComplex& a, const CellComplex& b);
// W + W -> W sending both copies identically.
ComplexMap fold_map(const ComplexEvaluation& w);
// Inclusion of copy 0 or 1 of W into the evaluation of W + W (or of any
// complex with W + W as a prefix).
ComplexMap copy_inclusion(const ComplexEvaluation& target, std::size_t copy_size, int copy);

struct GlueResult {
  CellComplex complex;
  // Index in the glued complex of each cell of the second complex.
  std::vector<std::uint32_t> placement;
};
// Pushout of a and b along a subcomplex of b identified with cells of a.
// identification[c] is the cell of a that cell c of b is glued to, if any.
GlueResult glue(const CellComplex& a, const CellComplex& b,
                const std::vector<std::optional<std::uint32_t>>& identification);

// The free boundary of h(M) built by the inductive gluing of copies of
// h(hat M) along the boundary of hat M, with the map into h(M) sending each
// cell to its inclusion.
struct BoundaryComplex {
  CellComplex complex;
  ComplexMap to_representable;  // images are hom(shape(c), M) indices
};
BoundaryComplex boundary_complex(std::shared_ptr<const BoundaryStructure> boundary,
                                 const ThetaShape& m);
// Boundary complex plus one cell of shape M: a complex evaluating to h(M).
BoundaryComplex representable_complex(std::shared_ptr<const BoundaryStructure> boundary,
                                      const ThetaShape& m);

}  // namespace hocalc
