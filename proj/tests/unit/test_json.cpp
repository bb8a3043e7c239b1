#include <doctest.h>

#include "hocalc/error.hpp"
#include "hocalc/fixtures.hpp"
#include "hocalc/json_io.hpp"
#include "hocalc/nerve.hpp"

using namespace hocalc;
using json_io::json;

namespace {

std::string error_of(const json& j) {
  try {
    json_io::category_from_json(j);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixture files match the built-in categories") {
  for (const auto& name : fixtures::names()) {
    const auto built = fixtures::by_name(name);
    const auto loaded = json_io::load_category(std::string(HOCALC_FIXTURE_DIR) + "/" + name + ".json");
    CHECK(json_io::to_json(loaded) == json_io::to_json(built));
    CHECK(loaded.arrow_count() == built.arrow_count());
    CHECK(json_io::to_json(json_io::category_from_json(json_io::to_json(built))) ==
          json_io::to_json(built));
  }
  CHECK(json_io::load_category("retract").object_count() == 2);
}

TEST_CASE("malformed categories name the offending field") {
  auto good = json_io::to_json(fixtures::arrow());
  auto j = good;
  j["arrows"][0]["src"] = "x";
  CHECK(error_of(j).rfind("/arrows/0/src:", 0) == 0);
  j = good;
  j["schema"] = "v0";
  CHECK(error_of(j).rfind("/schema:", 0) == 0);
  j = good;
  j.erase("objects");
  CHECK(error_of(j).find("missing 'objects'") != std::string::npos);

  // composable arrows without a composite
  j = json_io::to_json(fixtures::iso());
  j["compose"] = json::array();
  CHECK(error_of(j).find("missing composite") != std::string::npos);
  j = good;
  j["objects"][1] = 3;
  CHECK(error_of(j).rfind("/objects/1:", 0) == 0);
  CHECK_THROWS_AS(json_io::load_category("no-such-fixture"), ValidationError);
}

TEST_CASE("shapes and morphisms") {
  CHECK(json_io::shape_from_json(json::parse("[2,1]")) == ThetaShape({2, 1}));
  CHECK_THROWS_AS(json_io::shape_from_json(json::parse("[0]")), ValidationError);
  CHECK_THROWS_AS(json_io::shape_from_json(json::parse("3")), ValidationError);
  for (const auto& a : hom_set(ThetaShape({1}), ThetaShape({1, 1}))) {
    CHECK(json_io::morphism_from_json(json_io::to_json(a)) == a);
  }
  auto bad = json::parse(R"({"source":[1],"target":[1],"components":[[1,0]]})");
  CHECK_THROWS_AS(json_io::morphism_from_json(bad), ValidationError);
}

TEST_CASE("documents carry the schema version") {
  auto x = nerve(fixtures::arrow(), 2);
  CHECK(json_io::to_json(x)["schema"] == "v1");
  auto r = resolve(x);
  auto j = json_io::to_json(r);
  CHECK(j["schema"] == "v1");
  CHECK(j["f0"]["cells"] == 3);
  CHECK(j["structure_failures"].empty());
  // identical inputs give identical documents
  CHECK(j.dump() == json_io::to_json(resolve(x)).dump());
}
