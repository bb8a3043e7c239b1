#pragma once

// Finite presheaves on the bounded Theta^n support: level sets plus
// restriction tables along every canonical morphism.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hocalc/support.hpp"

namespace hocalc {

class Precat {
 public:
  explicit Precat(std::shared_ptr<const ThetaSupport> support);

  const ThetaSupport& support() const { return *support_; }
  const std::shared_ptr<const ThetaSupport>& support_ptr() const { return support_; }
  int n() const { return support_->n(); }
  int degree_bound() const { return support_->degree_bound(); }

  std::size_t size(ShapeId level) const { return labels_[level].size(); }
  std::vector<std::size_t> level_sizes() const;
  const std::string& label(ShapeId level, Elem x) const { return labels_[level][x]; }

  // Restriction X_M -> X_N along a: N -> M.
  Elem restrict(ShapeId n, ShapeId m, MorId a, Elem x) const {
    return tables_[n * support_->size() + m][a][x];
  }
  const std::vector<Elem>& restriction_table(ShapeId n, ShapeId m, MorId a) const {
    return tables_[n * support_->size() + m][a];
  }

  // Building. New elements start with unset restrictions (kUnset).
  Elem add_element(ShapeId level, std::string label);
  void set_restriction(ShapeId n, ShapeId m, MorId a, Elem x, Elem y) {
    tables_[n * support_->size() + m][a][x] = y;
  }

  // Elements of X_M restricted along each vertex map () -> M.
  std::vector<Elem> vertices(ShapeId m, Elem x) const;

  // Completeness, identity and functoriality of the restriction tables.
  // Returns a description of the first violation.
  std::optional<std::string> check() const;

  static constexpr Elem kUnset = static_cast<Elem>(-1);

 private:
  std::shared_ptr<const ThetaSupport> support_;
  std::vector<std::vector<std::string>> labels_;
  // [N * S + M][a][x]
  std::vector<std::vector<std::vector<Elem>>> tables_;
};

// A natural transformation, stored levelwise.
struct PrecatMap {
  std::vector<std::vector<Elem>> levels;

  Elem operator()(ShapeId level, Elem x) const { return levels[level][x]; }
  bool operator==(const PrecatMap&) const = default;
};

std::optional<std::string> check_natural(const Precat& source, const Precat& target,
                                         const PrecatMap& f);
PrecatMap identity_map(const Precat& x);
// second o first
PrecatMap then(const PrecatMap& first, const PrecatMap& second);
bool is_levelwise_bijective(const Precat& source, const Precat& target, const PrecatMap& f);

// h(M): level N is hom(N, M); restriction is precomposition.
Precat representable(std::shared_ptr<const ThetaSupport> support, const ThetaShape& m);

// The free boundary of h(M): the subpresheaf of elements in_boundary.
// Elements keep their hom(N, M) index in the label only; ids are dense.
struct BoundaryPresheaf {
  Precat object;
  PrecatMap inclusion;  // into representable(M)
};
BoundaryPresheaf boundary(std::shared_ptr<const ThetaSupport> support, const ThetaShape& m);

Precat terminal(std::shared_ptr<const ThetaSupport> support);

struct Pullback {
  Precat object;
  PrecatMap first;   // to X
  PrecatMap second;  // to Y
};
// X x_Z Y for f: X -> Z and g: Y -> Z; elements in lexicographic pair order.
Pullback pullback(const Precat& x, const Precat& y, const PrecatMap& f, const PrecatMap& g);

}  // namespace hocalc
