#pragma once

#include <string>
#include <vector>

#include "hocalc/category.hpp"

namespace hocalc::fixtures {

FiniteCategory point();
FiniteCategory arrow();           // 0 -f-> 1
FiniteCategory iso();             // u: 0 -> 1, v: 1 -> 0 mutually inverse
FiniteCategory composable_pair();  // f: 0 -> 1, g: 1 -> 2, gf
FiniteCategory parallel_pair();   // f, g: 0 -> 1
FiniteCategory z2();              // one object, g o g = id
// u: a -> b, v: b -> a with v o u = id_a and u o v = e idempotent, e != id_b.
FiniteCategory retract();

std::vector<std::string> names();
// Throws ValidationError for unknown names.
FiniteCategory by_name(const std::string& name);

}  // namespace hocalc::fixtures
