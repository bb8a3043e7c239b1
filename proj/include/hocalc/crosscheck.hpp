#pragma once

// Agreement between the canonical-form rule for Theta^n morphisms and the
// brute-force congruence closure.

#include <string>
#include <vector>

#include "hocalc/oracle.hpp"

namespace hocalc {

struct ClosureAgreement {
  bool ok = true;
  std::size_t morphisms = 0;  // padded Delta^n morphisms compared
  std::size_t classes = 0;
  std::size_t hom_pairs = 0;
  std::vector<std::string> mismatches;  // first few, human readable
};

ClosureAgreement compare_with_canonicalize(const oracle::ThetaClosure& closure);

}  // namespace hocalc
