#pragma once

// Seeded generators for property suites.

#include <cstdint>
#include <random>

#include "hocalc/complex.hpp"

namespace hocalc {

// Starts with `points` point cells and attaches up to `cells` further cells
// of random shapes along uniformly drawn compatible attachments.
CellComplex random_complex(std::shared_ptr<const BoundaryStructure> boundary, std::mt19937_64& rng,
                           int points, int cells);

}  // namespace hocalc
