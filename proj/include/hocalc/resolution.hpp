#pragma once

// The first stages F0 => F1 (-> F2) of a resolution of A by cell complexes.
//
// F1 is the completion of F0 + F0 over F0 along the fold map, so F0 + F0 is
// a literal prefix of F1 and the completion map is the degeneracy. The
// latching object C glues three copies of F1 along three copies of F0 in a
// triangle and maps to F1 x_F0 F1; F2 is its completion.

#include <optional>
#include <string>
#include <vector>

#include "hocalc/complex.hpp"
#include "hocalc/lifting.hpp"
#include "hocalc/precat.hpp"

namespace hocalc {

struct ResolutionConfig {
  int pass_limit = 8;
  bool build_f2 = false;
  BoundaryMode mode = BoundaryMode::free;
};

struct Resolution {
  Precat base;

  std::optional<ComplexEvaluation> f0;
  ComplexMap f0_to_base;
  CompletionReport f0_report;

  std::optional<ComplexEvaluation> f1;
  ComplexMap coface0;     // F0 -> F1, first copy
  ComplexMap coface1;     // F0 -> F1, second copy
  ComplexMap degeneracy;  // F1 -> F0
  CompletionReport f1_report;

  // Three copies of F1 glued on vertex copies X0, X1, X2 of F0: the first
  // joins X0 and X1, the second X1 and X2, the third X0 and X2.
  std::optional<CellComplex> latch;
  std::vector<std::vector<std::uint32_t>> latch_placement;  // [copy][F1 cell]
  std::optional<Pullback> fiber;                           // F1 x_F0 F1 along s, s
  ComplexMap latch_to_fiber;

  std::optional<ComplexEvaluation> f2;
  ComplexMap f2_to_fiber;
  CompletionReport f2_report;

  bool fixpoint() const;
  std::size_t f0_size() const { return f0 ? f0->complex().size() : 0; }
};

Resolution build_f0(const Precat& a, const ResolutionConfig& config = {});
void build_f1(Resolution& res, const ResolutionConfig& config = {});
void build_latch2(Resolution& res);
void build_f2(Resolution& res, const ResolutionConfig& config = {});
// All stages requested by the config.
Resolution resolve(const Precat& a, const ResolutionConfig& config = {});

// F1 -> F2 through the given copy of the triangle.
ComplexMap f2_coface(const Resolution& res, int copy);
// F2 -> F1 through the first or second projection of the fiber product.
ComplexMap f2_codegeneracy(const Resolution& res, int projection);

// Every structure-map identity available for the stages built; returns the
// failures (empty when all hold).
std::vector<std::string> check_structure(const Resolution& res);

}  // namespace hocalc
