#pragma once

// JSON form of the library's data, schema "v1". Categories list objects,
// non-identity arrows and non-identity composites; identities "id_<obj>" are
// implicit. Load errors are ValidationError with a JSON pointer prefix.

#include <string>

#include <json.hpp>

#include "hocalc/category.hpp"
#include "hocalc/complex.hpp"
#include "hocalc/homcalc.hpp"
#include "hocalc/lifting.hpp"
#include "hocalc/precat.hpp"
#include "hocalc/resolution.hpp"
#include "hocalc/theta.hpp"

namespace hocalc::json_io {

using nlohmann::json;

inline constexpr const char* kSchema = "v1";

json to_json(const ThetaShape& m);
ThetaShape shape_from_json(const json& j, const std::string& where = "");
json to_json(const ThetaMorphism& a);
ThetaMorphism morphism_from_json(const json& j, const std::string& where = "");

json to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const json& j);
// A path to a JSON file, or the name of a built-in fixture.
FiniteCategory load_category(const std::string& path_or_name);

json to_json(const Precat& x);
json to_json(const CellComplex& w);
json to_json(const CompletionReport& r);
json to_json(const Resolution& r);
json to_json(const MapSearchStats& s);
json to_json(const HomClasses& h);
json to_json(const MappingSpace& m);
json to_json(const Discrepancy& d);

}  // namespace hocalc::json_io
