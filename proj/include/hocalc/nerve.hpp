#pragma once

#include "hocalc/category.hpp"
#include "hocalc/precat.hpp"

namespace hocalc {

// Nerve of a finite category as a 1-precat: level (m) holds the composable
// strings of m arrows, level () the objects. Labels are "a|b|c" strings.
Precat nerve(const FiniteCategory& c, int degree_bound);

// Views a 1-precat as a 2-precat constant in the second direction:
// X'_() = X_(), X'_(m) = X'_(m,p) = X_(m).
Precat promote(const Precat& a);

// First component of a Theta^n morphism as a Theta^1 morphism.
ThetaMorphism first_component(const ThetaMorphism& a);

}  // namespace hocalc
