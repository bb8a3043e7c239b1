#pragma once

// Lifting squares against the elementary cofibrations d(M) -> h(M), and the
// completion that attaches a cell for every square without a lift.

#include <optional>
#include <string>
#include <vector>

#include "hocalc/complex.hpp"
#include "hocalc/precat.hpp"

namespace hocalc {

// A map f: W -> V of precats, with the boundaries squares are taken against.
struct LiftingContext {
  const Precat& source;
  const Precat& target;
  const PrecatMap& map;
  const BoundaryStructure& boundary;
};

// Boundary data w_0..w_r in W at face_source(M), base v in V_M.
struct LiftSquare {
  ShapeId shape;
  std::vector<Elem> boundary;
  Elem base;

  auto operator<=>(const LiftSquare&) const = default;
};

// Face restrictions of x in X_M, one per face of M.
std::vector<Elem> face_restrictions(const Precat& x, const BoundaryStructure& bs, ShapeId m,
                                    Elem e);

// Throws ValidationError if the square does not commute or is malformed.
void check_square(const LiftingContext& ctx, const LiftSquare& sq);

// Least w in W_M with the given faces and image, if any.
std::optional<Elem> find_lift(const LiftingContext& ctx, const LiftSquare& sq);

// All commuting squares of shape M, ordered by (boundary, base).
std::vector<LiftSquare> enumerate_squares(const LiftingContext& ctx, ShapeId m);

// Families of elements of X at face_source(M) agreeing on every overlap, in
// lexicographic order: the maps d(M) -> X.
std::vector<std::vector<Elem>> boundary_tuples(const Precat& x, const BoundaryStructure& bs,
                                               ShapeId m);

struct LiftingVerdict {
  bool ok = true;
  std::size_t squares = 0;
  std::optional<LiftSquare> witness;  // first square without a lift
};
LiftingVerdict satisfies_lifting(const LiftingContext& ctx);

struct CompletionConfig {
  int pass_limit = 8;
};

struct CompletionReport {
  int pass_limit = 0;
  int passes = 0;
  bool fixpoint = false;
  std::size_t initial_cells = 0;
  std::vector<std::string> shapes;
  std::vector<std::vector<std::size_t>> added;  // [pass][shape]
  std::vector<std::size_t> squares;            // scanned per pass
  std::vector<std::size_t> cells;              // total after each pass
  std::vector<std::size_t> elements;           // total evaluation size after each pass

  std::size_t total_added() const;
};

struct Completion {
  ComplexEvaluation evaluation;
  ComplexMap map;        // cell images in V
  PrecatMap induced;     // evaluation -> V
  CompletionReport report;
};

// Starting from g: U -> V, sweeps the shapes in order and attaches one cell
// per square with no lift at scan time, until a sweep adds nothing or the
// pass limit is reached.
Completion small_way(const CellComplex& u, const Precat& v, const ComplexMap& g,
                     const CompletionConfig& config = {});

}  // namespace hocalc
