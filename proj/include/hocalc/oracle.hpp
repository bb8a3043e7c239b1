#pragma once

// Brute-force ground truth. Functors and natural isomorphisms between finite
// categories, and the quotient of Delta^n morphisms by the constancy
// congruence. Nothing here uses the theta, precat or complex code.

#include <cstdint>
#include <string>
#include <vector>

#include "hocalc/category.hpp"

namespace hocalc::oracle {

struct FunctorData {
  std::vector<std::uint32_t> objects;
  std::vector<std::uint32_t> arrows;

  auto operator<=>(const FunctorData&) const = default;
};

// All functors a -> b, ordered by (objects, arrows).
std::vector<FunctorData> enumerate_functors(const FiniteCategory& a, const FiniteCategory& b);

// Whether some natural transformation F => G has all components invertible.
bool naturally_isomorphic(const FiniteCategory& a, const FiniteCategory& b, const FunctorData& f,
                          const FunctorData& g);

struct Partition {
  std::vector<std::size_t> class_of;
  std::size_t classes = 0;
  bool reflexive = true;
  bool symmetric = true;
  bool transitive = true;

  bool equivalence() const { return reflexive && symmetric && transitive; }
};
Partition natural_iso_classes(const std::vector<FunctorData>& functors, const FiniteCategory& a,
                              const FiniteCategory& b);

struct HoCatHom {
  std::size_t count = 0;
  std::vector<FunctorData> functors;
  Partition partition;
  std::vector<std::size_t> representatives;  // index of the first functor per class
};
HoCatHom ho_cat_hom(const FiniteCategory& a, const FiniteCategory& b);

// Isomorphism classes of objects, computed directly.
std::size_t object_iso_classes(const FiniteCategory& b);

// Delta^n objects are n-tuples of entries in [0, bound]; a morphism is a
// tuple of monotone value tables. Normalized objects have nothing nonzero
// after a zero.
struct DeltaMorphism {
  std::vector<int> source;
  std::vector<int> target;
  std::vector<std::vector<int>> components;
};

struct ClosureClasses {
  std::vector<int> source;
  std::vector<int> target;
  std::vector<DeltaMorphism> morphisms;
  std::vector<std::size_t> class_of;
  std::size_t classes = 0;
};

struct ThetaClosure {
  int n = 0;
  int bound = 0;
  std::vector<ClosureClasses> homs;  // one per ordered pair of normalized objects
  std::size_t generating_pairs = 0;
};

// Throws BoundError when n > 4 or bound > 3.
ThetaClosure theta_congruence_closure(int n, int bound);

// Spot check of the congruence property: composing members of one class
// with a fixed morphism on either side lands in one class. Returns the
// number of failures.
std::size_t congruence_failures(const ThetaClosure& c);

}  // namespace hocalc::oracle
