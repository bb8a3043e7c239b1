#pragma once

// Maps from cell complexes into precats, found cell by cell, and the
// homotopy classes of maps F0 -> B cut out by maps F1 -> B.

#include <optional>
#include <string>
#include <vector>

#include "hocalc/category.hpp"
#include "hocalc/complex.hpp"
#include "hocalc/precat.hpp"
#include "hocalc/resolution.hpp"

namespace hocalc {

struct MapSearchConfig {
  std::size_t max_maps = 1'000'000;  // BoundError beyond this
};

// Search-tree statistics, per cell in complex order.
struct MapSearchStats {
  std::vector<std::size_t> visits;      // times the cell was reached
  std::vector<std::size_t> candidates;  // candidates offered, summed over visits
  std::size_t nodes = 0;
  std::size_t dead_ends = 0;  // visits with no candidate
};

struct MapSet {
  std::vector<ComplexMap> maps;  // lexicographic in the images
  MapSearchStats stats;
};

// Every map W -> B. A cell of shape M takes an element of B_M whose faces
// are the images of its attachment.
MapSet enumerate_maps(const CellComplex& w, const Precat& b, const MapSearchConfig& config = {});

// Extension of the images of the first prefix.size() cells to a map
// W -> B, least in lexicographic order, if one exists.
std::optional<ComplexMap> find_extension(const CellComplex& w, const Precat& b,
                                         const std::vector<Elem>& prefix);

struct RelationEdge {
  std::size_t from;
  std::size_t to;
  ComplexMap witness;  // F1 -> B
};

// Pairs (g, g') of maps F0 -> B, indices into maps, joined by a map F1 -> B.
std::vector<RelationEdge> relation_edges(const Resolution& res, const Precat& b,
                                         const std::vector<ComplexMap>& maps);

struct HomClasses {
  std::vector<ComplexMap> maps;  // F0 -> B
  std::vector<RelationEdge> edges;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> representatives;  // first map of each class
  std::size_t classes = 0;
  bool reflexive = true;
  bool symmetric = true;
  bool transitive = true;
  // The raw relation is already an equivalence relation.
  bool single_step_sufficient() const { return reflexive && symmetric && transitive; }
};

HomClasses hom_classes(const Resolution& res, const Precat& b, const MapSearchConfig& config = {});

// Levels 0..L of Hom(F^k, B) with faces and degeneracies given by
// precomposition.
struct MappingSpace {
  int levels = 0;
  std::vector<std::vector<ComplexMap>> simplices;  // [level]
  // faces[k][i][x]: d_i of simplex x at level k (k >= 1)
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  // degeneracies[k][j][x]: s_j of simplex x at level k (k < levels - 1)
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies;
  std::vector<std::string> identity_failures;
  std::size_t pi0 = 0;
  std::vector<std::size_t> component_of;  // level 0
};

MappingSpace mapping_space(const Resolution& res, const Precat& b, int max_level,
                           const MapSearchConfig& config = {});

// Method classes against the functor oracle for A, B finite categories.
struct Discrepancy {
  std::string a;
  std::string b;
  std::size_t method = 0;
  std::size_t oracle = 0;
  bool agree = false;
  bool single_step_sufficient = false;
  std::size_t maps = 0;
  std::size_t edges = 0;
  bool fixpoint = true;
  // Functors in distinct oracle classes whose maps share a method class,
  // with the F0 images of both.
  struct Witness {
    std::size_t first_functor;
    std::size_t second_functor;
    ComplexMap first;
    ComplexMap second;
    std::optional<ComplexMap> direct;  // F1 -> B joining them, when one step suffices
  };
  std::vector<Witness> witnesses;
};

struct SuiteEntry {
  std::string a_name;
  std::string b_name;
  FiniteCategory a;
  FiniteCategory b;
};

Discrepancy compare_with_oracle(const SuiteEntry& entry, int degree_bound,
                                const ResolutionConfig& config = {});
std::vector<Discrepancy> discrepancy_report(const std::vector<SuiteEntry>& suite,
                                            int degree_bound, const ResolutionConfig& config = {});

// Named suites of fixture pairs: "acceptance" (hand-counted pairs) and
// "discrepancy" (pairs probing the retract category). ValidationError for
// other names.
std::vector<SuiteEntry> named_suite(const std::string& name);

// The functor's action on nerves, as images of the F0 cells.
ComplexMap map_of_functor(const Resolution& res, const FiniteCategory& a, const FiniteCategory& b,
                          const Precat& nerve_b, const std::vector<std::uint32_t>& objects,
                          const std::vector<std::uint32_t>& arrows);

}  // namespace hocalc
