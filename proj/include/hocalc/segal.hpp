#pragma once

// Segal-type checks for precats with n <= 2: when a precat is an
// n-category, when a map is an equivalence, rows and vertex slices of a
// 2-precat, and the reduction of lifting problems to slices.

#include <string>
#include <vector>

#include "hocalc/category.hpp"
#include "hocalc/precat.hpp"
#include "hocalc/support.hpp"

namespace hocalc {

struct CheckResult {
  bool ok = true;
  std::string witness;  // first failure, human readable
};

// n = 1: strict Segal bijections up to the bound. n = 2: every row is a
// 1-category and the Segal functors are equivalences. Needs d >= 2 at n = 2.
CheckResult is_ncategory(const Precat& x);

// Requires both sides to pass is_ncategory (ValidationError otherwise).
CheckResult is_equivalence(const Precat& x, const Precat& y, const PrecatMap& f);

// The finite category presented by a 1-precat that passes is_ncategory,
// with the correspondence to its level sets. Needs d >= 2.
struct UnderlyingCategory {
  FiniteCategory category;
  std::vector<std::uint32_t> arrow_of;  // element of X_(1) -> arrow
  std::vector<Elem> element_of;         // arrow -> element of X_(1)
};
UnderlyingCategory underlying_category(const Precat& x);

struct Functor {
  std::vector<std::uint32_t> objects;
  std::vector<std::uint32_t> arrows;
};
// Fully faithful and essentially surjective, by exhaustive search.
CheckResult is_equivalence(const FiniteCategory& a, const FiniteCategory& b, const Functor& f);

// A 1-precat carved out of a 2-precat, with the inclusion of its elements.
struct SubPrecat {
  Precat object;
  std::vector<std::vector<Elem>> embedding;  // [level][elem] -> element of X
};

// Row m: level () is X_(m), level (p) is X_(m,p).
SubPrecat row(const Precat& x, int m);
// Elements of row m whose m+1 vertices are xs.
SubPrecat slice(const Precat& x, int m, const std::vector<Elem>& xs);

// For shape (m, N): a square against f has a lift iff the matching square
// of shape N against the slice map over its vertices has one. Checks every
// square; ok = false names the first mismatch.
struct SliceReduction {
  CheckResult result;
  std::size_t squares = 0;
  std::size_t lifted = 0;
};
SliceReduction slice_reduction_check(const Precat& x, const Precat& y, const PrecatMap& f,
                                     const ThetaShape& shape);

}  // namespace hocalc
