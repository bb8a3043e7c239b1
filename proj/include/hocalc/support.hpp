#pragma once

// Indexed, bounded view of Theta^n: the shapes with entries <= d, their hom
// sets, and cached composition tables. Presheaves and cell complexes refer
// to shapes and morphisms by index into one shared ThetaSupport.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hocalc/theta.hpp"

namespace hocalc {

using ShapeId = std::uint32_t;
using MorId = std::uint32_t;
using Elem = std::uint32_t;

class ThetaSupport {
 public:
  // Cached per (n, d); the returned object is immutable apart from lazily
  // filled composition tables.
  static std::shared_ptr<const ThetaSupport> make(int n, int degree_bound);

  ThetaSupport(int n, int degree_bound);

  int n() const { return n_; }
  int degree_bound() const { return d_; }
  std::size_t size() const { return shapes_.size(); }
  const std::vector<ThetaShape>& shapes() const { return shapes_; }
  const ThetaShape& shape(ShapeId s) const { return shapes_[s]; }
  ShapeId point() const { return 0; }

  std::optional<ShapeId> find(const ThetaShape& m) const;
  ShapeId id(const ThetaShape& m) const;  // throws ValidationError

  // Canonical morphisms N -> M.
  const std::vector<ThetaMorphism>& hom(ShapeId n, ShapeId m) const {
    return homs_[n * size() + m];
  }
  MorId find_morphism(const ThetaMorphism& a) const;  // throws if absent
  MorId identity(ShapeId m) const { return identities_[m]; }

  // g: N -> P, f: P -> M; index of f o g in hom(N, M).
  MorId compose(ShapeId n, ShapeId p, ShapeId m, MorId g, MorId f) const;

 private:
  std::size_t pair(ShapeId a, ShapeId b) const { return a * size() + b; }
  const std::vector<MorId>& table(ShapeId n, ShapeId p, ShapeId m) const;

  int n_;
  int d_;
  std::vector<ThetaShape> shapes_;
  std::map<std::vector<int>, ShapeId> shape_index_;
  std::vector<std::vector<ThetaMorphism>> homs_;
  std::vector<std::map<std::vector<int>, MorId>> hom_index_;
  std::vector<MorId> identities_;

  mutable std::vector<std::vector<MorId>> tables_;
  mutable std::unique_ptr<std::once_flag[]> table_once_;
};

// Encoding of a morphism used as a lookup key within one hom set.
std::vector<int> morphism_key(const ThetaMorphism& a);

enum class BoundaryMode {
  // The free boundary: elements factoring through a face hat(M) -> M.
  free,
  // Experimental, n = 1 only: classical simplicial boundary, attached along
  // the codimension-one faces d_0..d_m.
  full,
};

const char* to_string(BoundaryMode mode);
BoundaryMode boundary_mode_from_string(const std::string& s);

// Which elements of h(M) lie in the boundary, the face maps a cell of shape M
// is attached along, and how a boundary element factors through a face.
class BoundaryStructure {
 public:
  static std::shared_ptr<const BoundaryStructure> make(std::shared_ptr<const ThetaSupport> support,
                                                       BoundaryMode mode = BoundaryMode::free);
  static std::shared_ptr<const BoundaryStructure> make(int n, int degree_bound,
                                                       BoundaryMode mode = BoundaryMode::free);

  BoundaryStructure(std::shared_ptr<const ThetaSupport> support, BoundaryMode mode);

  const ThetaSupport& support() const { return *support_; }
  const std::shared_ptr<const ThetaSupport>& support_ptr() const { return support_; }
  BoundaryMode mode() const { return mode_; }

  // Source of the face maps of M; empty for the point.
  std::optional<ShapeId> face_source(ShapeId m) const { return face_source_[m]; }
  // Indices into hom(face_source(M), M).
  const std::vector<MorId>& faces(ShapeId m) const { return faces_[m]; }

  bool in_boundary(ShapeId n, ShapeId m, MorId a) const {
    return interior_pos_[pair(n, m)][a] < 0;
  }
  const std::vector<MorId>& interior(ShapeId n, ShapeId m) const {
    return interior_[pair(n, m)];
  }
  // Position of a in interior(N, M), or -1 for boundary elements.
  int interior_position(ShapeId n, ShapeId m, MorId a) const {
    return interior_pos_[pair(n, m)][a];
  }

  struct FaceFactor {
    std::uint32_t face;
    MorId through;  // in hom(N, face_source(M))
  };
  // For a boundary element a: N -> M, a = faces(M)[face] o through.
  FaceFactor factor(ShapeId n, ShapeId m, MorId a) const { return factor_[pair(n, m)][a]; }

  // Pairs (b, b') with face_i o b = face_j o b' (i < j). A family of
  // elements indexed by faces defines a map out of the boundary iff it
  // agrees on every overlap.
  struct Overlap {
    std::uint32_t i;
    std::uint32_t j;
    ShapeId level;
    MorId left;
    MorId right;
  };
  const std::vector<Overlap>& overlaps(ShapeId m) const { return overlaps_[m]; }

 private:
  std::size_t pair(ShapeId a, ShapeId b) const { return a * support_->size() + b; }

  std::shared_ptr<const ThetaSupport> support_;
  BoundaryMode mode_;
  std::vector<std::optional<ShapeId>> face_source_;
  std::vector<std::vector<MorId>> faces_;
  std::vector<std::vector<MorId>> interior_;
  std::vector<std::vector<int>> interior_pos_;
  std::vector<std::vector<FaceFactor>> factor_;
  std::vector<std::vector<Overlap>> overlaps_;
};

}  // namespace hocalc
