#include "hocalc/json_io.hpp"

#include <fstream>
#include <set>

#include "hocalc/error.hpp"
#include "hocalc/fixtures.hpp"

namespace hocalc::json_io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ValidationError((where.empty() ? "/" : where) + ": " + what);
}

const json& field(const json& j, const std::string& where, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing '") + key + "'");
  return j.at(key);
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

void check_schema(const json& j) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema) {
    bad("/schema", "unsupported schema " + j.at("schema").dump());
  }
}

json census(const CellComplex& w) {
  json out = json::object();
  const auto c = w.census();
  for (ShapeId s = 0; s < c.size(); ++s) {
    if (c[s]) out[w.support().shape(s).str()] = c[s];
  }
  return out;
}

json images(const ComplexMap& f) { return f.images; }

}  // namespace

json to_json(const ThetaShape& m) { return m.entries(); }

ThetaShape shape_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "a shape is an array of positive integers");
  std::vector<int> e;
  for (std::size_t i = 0; i < j.size(); ++i) e.push_back(integer(j[i], where + "/" + std::to_string(i)));
  try {
    return ThetaShape(e);
  } catch (const ValidationError& err) {
    bad(where, err.what());
  }
}

json to_json(const ThetaMorphism& a) {
  json comps = json::array();
  for (const auto& c : a.components) comps.push_back(c.values());
  return {{"source", to_json(a.source)}, {"target", to_json(a.target)}, {"components", comps}};
}

ThetaMorphism morphism_from_json(const json& j, const std::string& where) {
  ThetaMorphism a;
  a.source = shape_from_json(field(j, where, "source"), where + "/source");
  a.target = shape_from_json(field(j, where, "target"), where + "/target");
  const auto& comps = field(j, where, "components");
  if (!comps.is_array()) bad(where + "/components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto w = where + "/components/" + std::to_string(i);
    if (!comps[i].is_array()) bad(w, "expected a value table");
    std::vector<int> v;
    for (std::size_t k = 0; k < comps[i].size(); ++k) v.push_back(integer(comps[i][k], w));
    try {
      a.components.emplace_back(a.target.padded(static_cast<int>(i)), v);
    } catch (const ValidationError& err) {
      bad(w, err.what());
    }
  }
  try {
    validate_morphism(a);
  } catch (const ValidationError& err) {
    bad(where, err.what());
  }
  return a;
}

json to_json(const FiniteCategory& c) {
  json objects = json::array(), arrows = json::array(), compose = json::array();
  for (std::uint32_t x = 0; x < c.object_count(); ++x) objects.push_back(c.object_name(x));
  for (std::uint32_t a = 0; a < c.arrow_count(); ++a) {
    if (c.is_identity(a)) continue;
    const auto& arr = c.arrow(a);
    arrows.push_back({{"name", arr.name}, {"src", c.object_name(arr.src)}, {"dst", c.object_name(arr.dst)}});
  }
  for (std::uint32_t f = 0; f < c.arrow_count(); ++f) {
    for (std::uint32_t g = 0; g < c.arrow_count(); ++g) {
      if (c.is_identity(f) || c.is_identity(g) || c.arrow(f).dst != c.arrow(g).src) continue;
      compose.push_back({{"first", c.arrow(f).name}, {"then", c.arrow(g).name},
                         {"result", c.arrow(c.compose(f, g)).name}});
    }
  }
  return {{"schema", kSchema}, {"name", c.name}, {"objects", objects}, {"arrows", arrows},
          {"compose", compose}};
}

FiniteCategory category_from_json(const json& j) {
  if (!j.is_object()) bad("", "a category is a JSON object");
  check_schema(j);
  FiniteCategory c;
  if (j.contains("name")) c.name = str(j.at("name"), "/name");
  const auto& objects = field(j, "", "objects");
  if (!objects.is_array()) bad("/objects", "expected an array");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto w = "/objects/" + std::to_string(i);
    try {
      c.add_object(str(objects[i], w));
    } catch (const ValidationError& e) {
      bad(w, e.what());
    }
  }
  auto object = [&](const json& v, const std::string& w) {
    const auto name = str(v, w);
    const auto x = c.find_object(name);
    if (!x) bad(w, "unknown object '" + name + "'");
    return *x;
  };
  auto arrow = [&](const json& v, const std::string& w) {
    const auto name = str(v, w);
    const auto a = c.find_arrow(name);
    if (!a) bad(w, "unknown arrow '" + name + "'");
    return *a;
  };
  if (j.contains("arrows")) {
    const auto& arrows = j.at("arrows");
    if (!arrows.is_array()) bad("/arrows", "expected an array");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const auto w = "/arrows/" + std::to_string(i);
      const auto name = str(field(arrows[i], w, "name"), w + "/name");
      const auto s = object(field(arrows[i], w, "src"), w + "/src");
      const auto t = object(field(arrows[i], w, "dst"), w + "/dst");
      try {
        c.add_arrow(name, s, t);
      } catch (const ValidationError& e) {
        bad(w, e.what());
      }
    }
  }
  if (j.contains("compose")) {
    const auto& comp = j.at("compose");
    if (!comp.is_array()) bad("/compose", "expected an array");
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto w = "/compose/" + std::to_string(i);
      const auto f = arrow(field(comp[i], w, "first"), w + "/first");
      const auto g = arrow(field(comp[i], w, "then"), w + "/then");
      const auto r = arrow(field(comp[i], w, "result"), w + "/result");
      try {
        c.set_composite(f, g, r);
      } catch (const ValidationError& e) {
        bad(w, e.what());
      }
    }
  }
  try {
    c.validate();
  } catch (const ValidationError& e) {
    bad("", e.what());
  }
  return c;
}

FiniteCategory load_category(const std::string& path_or_name) {
  std::ifstream in(path_or_name);
  if (!in) {
    for (const auto& n : fixtures::names()) {
      if (n == path_or_name) return fixtures::by_name(n);
    }
    throw ValidationError(path_or_name + ": no such file or fixture");
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path_or_name + ": " + e.what());
  }
  try {
    return category_from_json(j);
  } catch (const ValidationError& e) {
    throw ValidationError(path_or_name + ": " + e.what());
  }
}

json to_json(const Precat& x) {
  const auto& sup = x.support();
  json levels = json::array();
  for (ShapeId l = 0; l < sup.size(); ++l) {
    json elems = json::array();
    for (Elem e = 0; e < x.size(l); ++e) elems.push_back(x.label(l, e));
    json faces = json::array();
    for (ShapeId m = 0; m < sup.size(); ++m) {
      if (m == l || x.size(m) == 0) continue;
      const auto& h = sup.hom(l, m);
      for (MorId a = 0; a < h.size(); ++a) {
        faces.push_back({{"morphism", to_json(h[a])}, {"table", x.restriction_table(l, m, a)}});
      }
    }
    levels.push_back({{"shape", to_json(sup.shape(l))}, {"elements", elems}, {"restrictions", faces}});
  }
  return {{"schema", kSchema}, {"n", x.n()}, {"degree_bound", x.degree_bound()}, {"levels", levels}};
}

json to_json(const CellComplex& w) {
  json cells = json::array();
  for (const auto& c : w.cells()) {
    json att = json::array();
    for (const auto& r : c.attachment) att.push_back({r.cell, r.interior});
    cells.push_back({{"shape", to_json(w.support().shape(c.shape))}, {"label", c.label}, {"attachment", att}});
  }
  return {{"schema", kSchema},
          {"n", w.support().n()},
          {"degree_bound", w.support().degree_bound()},
          {"mode", to_string(w.boundary().mode())},
          {"census", census(w)},
          {"cells", cells}};
}

json to_json(const CompletionReport& r) {
  json added = json::array();
  for (const auto& pass : r.added) {
    json row = json::object();
    for (std::size_t s = 0; s < pass.size(); ++s) {
      if (pass[s]) row[r.shapes[s]] = pass[s];
    }
    added.push_back(row);
  }
  return {{"pass_limit", r.pass_limit}, {"passes", r.passes},     {"fixpoint", r.fixpoint},
          {"initial_cells", r.initial_cells}, {"added", added},   {"squares", r.squares},
          {"cells", r.cells},               {"elements", r.elements}};
}

json to_json(const Resolution& r) {
  json out = {{"schema", kSchema}, {"n", r.base.n()}, {"degree_bound", r.base.degree_bound()},
              {"fixpoint", r.fixpoint()}};
  if (r.f0) {
    out["f0"] = {{"cells", r.f0->complex().size()}, {"census", census(r.f0->complex())},
                 {"report", to_json(r.f0_report)}, {"to_base", images(r.f0_to_base)},
                 {"complex", to_json(r.f0->complex())}};
  }
  if (r.f1) {
    out["f1"] = {{"cells", r.f1->complex().size()}, {"census", census(r.f1->complex())},
                 {"report", to_json(r.f1_report)}, {"coface0", images(r.coface0)},
                 {"coface1", images(r.coface1)}, {"degeneracy", images(r.degeneracy)},
                 {"complex", to_json(r.f1->complex())}};
  }
  if (r.latch) {
    out["latch"] = {{"cells", r.latch->size()}, {"census", census(*r.latch)},
                    {"placement", r.latch_placement}, {"to_fiber", images(r.latch_to_fiber)},
                    {"fiber_sizes", r.fiber->object.level_sizes()}};
  }
  if (r.f2) {
    out["f2"] = {{"cells", r.f2->complex().size()}, {"census", census(r.f2->complex())},
                 {"report", to_json(r.f2_report)}, {"to_fiber", images(r.f2_to_fiber)}};
  }
  out["structure_failures"] = check_structure(r);
  return out;
}

json to_json(const MapSearchStats& s) {
  return {{"visits", s.visits}, {"candidates", s.candidates}, {"nodes", s.nodes},
          {"dead_ends", s.dead_ends}};
}

json to_json(const HomClasses& h) {
  json maps = json::array(), edges = json::array();
  for (const auto& m : h.maps) maps.push_back(m.images);
  for (const auto& e : h.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"witness", e.witness.images}});
  }
  return {{"schema", kSchema},
          {"maps", maps},
          {"edges", edges},
          {"classes", h.classes},
          {"class_of", h.class_of},
          {"representatives", h.representatives},
          {"reflexive", h.reflexive},
          {"symmetric", h.symmetric},
          {"transitive", h.transitive},
          {"single_step_sufficient", h.single_step_sufficient()}};
}

json to_json(const MappingSpace& m) {
  json sizes = json::array();
  for (const auto& l : m.simplices) sizes.push_back(l.size());
  return {{"schema", kSchema},       {"levels", m.levels},
          {"sizes", sizes},          {"faces", m.faces},
          {"degeneracies", m.degeneracies}, {"identity_failures", m.identity_failures},
          {"pi0", m.pi0},            {"component_of", m.component_of}};
}

json to_json(const Discrepancy& d) {
  json wit = json::array();
  for (const auto& w : d.witnesses) {
    json x = {{"functors", {w.first_functor, w.second_functor}},
              {"maps", {w.first.images, w.second.images}}};
    x["direct"] = w.direct ? json(w.direct->images) : json(nullptr);
    wit.push_back(x);
  }
  return {{"a", d.a},
          {"b", d.b},
          {"method", d.method},
          {"oracle", d.oracle},
          {"agree", d.agree},
          {"flagged", !d.agree},
          {"single_step_sufficient", d.single_step_sufficient},
          {"maps", d.maps},
          {"edges", d.edges},
          {"fixpoint", d.fixpoint},
          {"witnesses", wit}};
}

}  // namespace hocalc::json_io
