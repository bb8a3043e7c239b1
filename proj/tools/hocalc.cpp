// Command-line driver. Every command writes one JSON document (to --out or
// stdout); report also prints a table to stderr.
//
// Exit codes: 0 ok, 2 a completion hit --pass-limit, 3 invalid input,
// 4 a computation exceeded its size guard.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "hocalc/crosscheck.hpp"
#include "hocalc/error.hpp"
#include "hocalc/fixtures.hpp"
#include "hocalc/homcalc.hpp"
#include "hocalc/json_io.hpp"
#include "hocalc/nerve.hpp"
#include "hocalc/oracle.hpp"
#include "hocalc/random.hpp"
#include "hocalc/segal.hpp"

using namespace hocalc;
using json_io::json;

namespace {

struct RunConfig {
  int n = 1;
  int degree_bound = 3;
  int pass_limit = 8;
  std::string mode = "free";
  std::string out;
  std::uint64_t seed = 1;

  BoundaryMode boundary_mode() const { return boundary_mode_from_string(mode); }
  ResolutionConfig resolution(bool f2 = false) const {
    return ResolutionConfig{pass_limit, f2, boundary_mode()};
  }
  void validate() const {
    if (n != 1 && n != 2) throw ValidationError("--n must be 1 or 2");
    if (degree_bound < 1) throw ValidationError("--degree-bound must be at least 1");
    if (pass_limit < 1) throw ValidationError("--pass-limit must be at least 1");
    if (boundary_mode() == BoundaryMode::full && n != 1) {
      throw ValidationError("--mode full needs --n 1");
    }
  }
};

constexpr int kPassLimit = 2;
constexpr int kInvalid = 3;
constexpr int kTooLarge = 4;

ThetaShape parse_shape(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw ValidationError("'" + text + "' is not a JSON shape such as [2,1]");
  }
  return json_io::shape_from_json(j, "/shape");
}

ThetaMorphism parse_morphism(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw ValidationError("'" + text + "' is not a JSON morphism");
  }
  return json_io::morphism_from_json(j, "");
}

// The n-precat of a category: its nerve, promoted when n = 2.
Precat precat_of(const FiniteCategory& c, const RunConfig& rc) {
  auto x = nerve(c, rc.degree_bound);
  return rc.n == 2 ? promote(x) : x;
}

struct Command {
  json result;
  bool pass_limit_hit = false;
};

Command cmd_theta(const RunConfig& rc, const std::string& op, const std::vector<std::string>& args) {
  Command c;
  if (op == "hom") {
    if (args.size() != 2) throw ValidationError("theta hom needs SOURCE TARGET");
    const auto s = parse_shape(args[0]), t = parse_shape(args[1]);
    s.validate(rc.n);
    t.validate(rc.n);
    const auto h = hom_set(s, t);
    json ms = json::array();
    for (const auto& a : h) ms.push_back(json_io::to_json(a));
    c.result = {{"source", args[0]}, {"target", args[1]}, {"count", h.size()}, {"morphisms", ms}};
  } else if (op == "compose") {
    if (args.size() != 2) throw ValidationError("theta compose needs FIRST SECOND");
    const auto g = parse_morphism(args[0]), f = parse_morphism(args[1]);
    if (g.target != f.source) throw ValidationError("morphisms are not composable");
    c.result = {{"composite", json_io::to_json(compose(g, f))}};
  } else if (op == "shapes") {
    json shapes = json::array();
    for (const auto& m : enumerate_shapes(rc.n, rc.degree_bound)) shapes.push_back(json_io::to_json(m));
    c.result = {{"count", shapes.size()}, {"shapes", shapes}};
  } else if (op == "faces") {
    if (args.size() != 1) throw ValidationError("theta faces needs SHAPE");
    const auto m = parse_shape(args[0]);
    m.validate(rc.n);
    json fs = json::array();
    for (const auto& a : faces(m)) fs.push_back(json_io::to_json(a));
    c.result = {{"shape", json_io::to_json(m)}, {"faces", fs}};
  } else {
    throw ValidationError("theta operations: hom, compose, shapes, faces");
  }
  c.result["n"] = rc.n;
  c.result["schema"] = json_io::kSchema;
  return c;
}

Command cmd_boundary(const RunConfig& rc, const std::string& shape) {
  const auto m = parse_shape(shape);
  auto bs = BoundaryStructure::make(rc.n, std::max(rc.degree_bound, m.max_entry()), rc.boundary_mode());
  auto bc = boundary_complex(bs, m);
  auto ev = evaluate(bc.complex);
  auto presheaf = boundary(bs->support_ptr(), m);
  const auto& sup = bs->support();
  json levels = json::array();
  bool dual = true;
  for (ShapeId l = 0; l < sup.size(); ++l) {
    const auto a = ev.precat().size(l), b = presheaf.object.size(l);
    levels.push_back({{"shape", json_io::to_json(sup.shape(l))}, {"complex", a}, {"boundary", b}});
    dual = dual && a == b;
  }
  const auto map = induced_map(ev, representable(bs->support_ptr(), m), bc.to_representable);
  Command c;
  c.result = {{"schema", json_io::kSchema},
              {"shape", json_io::to_json(m)},
              {"mode", rc.mode},
              {"levels", levels},
              {"sizes_match", dual},
              {"map_valid", !check_natural(ev.precat(), representable(bs->support_ptr(), m), map)},
              {"complex", json_io::to_json(bc.complex)}};
  return c;
}

Command cmd_resolve(const RunConfig& rc, const std::string& a, bool f2) {
  auto res = resolve(precat_of(json_io::load_category(a), rc), rc.resolution(f2));
  Command c;
  c.result = json_io::to_json(res);
  c.pass_limit_hit = !res.fixpoint();
  return c;
}

Command cmd_maps(const RunConfig& rc, const std::string& b, const std::string& shape,
                 const std::string& from, int stage) {
  const auto target = precat_of(json_io::load_category(b), rc);
  Command c;
  MapSet ms;
  if (!from.empty()) {
    if (stage < 0 || stage > 1) throw ValidationError("--stage must be 0 or 1");
    auto res = resolve(precat_of(json_io::load_category(from), rc), rc.resolution());
    c.pass_limit_hit = !res.fixpoint();
    ms = enumerate_maps(stage == 0 ? res.f0->complex() : res.f1->complex(), target);
    c.result["source"] = {{"from", from}, {"stage", stage}};
  } else {
    const auto m = parse_shape(shape);
    auto bs = BoundaryStructure::make(target.support_ptr(), rc.boundary_mode());
    ms = enumerate_maps(representable_complex(bs, m).complex, target);
    c.result["source"] = {{"representable", json_io::to_json(m)}};
  }
  json maps = json::array();
  for (const auto& m : ms.maps) maps.push_back(m.images);
  c.result["schema"] = json_io::kSchema;
  c.result["count"] = ms.maps.size();
  c.result["maps"] = maps;
  c.result["stats"] = json_io::to_json(ms.stats);
  return c;
}

Command cmd_homclasses(const RunConfig& rc, const std::string& a, const std::string& b,
                       bool with_oracle) {
  const auto ca = json_io::load_category(a), cb = json_io::load_category(b);
  auto res = resolve(precat_of(ca, rc), rc.resolution());
  const auto target = precat_of(cb, rc);
  Command c;
  c.pass_limit_hit = !res.fixpoint();
  c.result = json_io::to_json(hom_classes(res, target));
  c.result["target_is_ncategory"] = is_ncategory(target).ok;
  if (with_oracle) {
    if (rc.n != 1) throw ValidationError("the functor oracle is for --n 1");
    c.result["oracle_comparison"] =
        json_io::to_json(compare_with_oracle({a, b, ca, cb}, rc.degree_bound, rc.resolution()));
  }
  return c;
}

Command cmd_mapping_space(const RunConfig& rc, const std::string& a, const std::string& b, int levels) {
  auto res = resolve(precat_of(json_io::load_category(a), rc), rc.resolution(levels >= 3));
  Command c;
  c.pass_limit_hit = !res.fixpoint();
  c.result = json_io::to_json(mapping_space(res, precat_of(json_io::load_category(b), rc), levels - 1));
  return c;
}

Command cmd_check(const RunConfig& rc, const std::string& b) {
  const auto cat = json_io::load_category(b);
  const auto x = precat_of(cat, rc);
  const auto r = is_ncategory(x);
  Command c;
  c.result = {{"schema", json_io::kSchema}, {"n", rc.n}, {"degree_bound", rc.degree_bound},
              {"category", json_io::to_json(cat)},
              {"n_category", r.ok}, {"witness", r.witness}, {"level_sizes", x.level_sizes()}};
  return c;
}

Command cmd_oracle(const RunConfig& rc, const std::string& what, const std::vector<std::string>& args,
                   int bound) {
  Command c;
  if (what == "homcat") {
    if (args.size() != 2) throw ValidationError("oracle homcat needs A B");
    const auto a = json_io::load_category(args[0]), b = json_io::load_category(args[1]);
    const auto h = oracle::ho_cat_hom(a, b);
    json functors = json::array();
    for (const auto& f : h.functors) functors.push_back({{"objects", f.objects}, {"arrows", f.arrows}});
    c.result = {{"count", h.count},
                {"functors", functors},
                {"class_of", h.partition.class_of},
                {"representatives", h.representatives},
                {"equivalence_relation", h.partition.equivalence()}};
  } else if (what == "theta") {
    const auto cl = oracle::theta_congruence_closure(rc.n, bound);
    const auto agreement = compare_with_canonicalize(cl);
    json homs = json::array();
    for (const auto& h : cl.homs) {
      json ms = json::array();
      for (const auto& m : h.morphisms) ms.push_back(m.components);
      homs.push_back({{"source", h.source}, {"target", h.target}, {"classes", h.classes},
                      {"morphisms", ms}, {"class_of", h.class_of}});
    }
    c.result = {{"n", rc.n},
                {"bound", bound},
                {"homs", homs},
                {"generating_pairs", cl.generating_pairs},
                {"agrees_with_canonical_forms", agreement.ok},
                {"mismatches", agreement.mismatches}};
  } else {
    throw ValidationError("oracle subjects: homcat, theta");
  }
  c.result["schema"] = json_io::kSchema;
  return c;
}

Command cmd_report(const RunConfig& rc, const std::string& suite) {
  const auto rows = discrepancy_report(named_suite(suite), rc.degree_bound, rc.resolution());
  Command c;
  json out = json::array();
  std::size_t mismatches = 0;
  std::cerr << std::left << std::setw(18) << "pair" << std::setw(8) << "method" << std::setw(8)
            << "oracle" << std::setw(10) << "agree" << "single-step\n";
  for (const auto& r : rows) {
    out.push_back(json_io::to_json(r));
    mismatches += !r.agree;
    c.pass_limit_hit = c.pass_limit_hit || !r.fixpoint;
    std::cerr << std::setw(18) << (r.a + "," + r.b) << std::setw(8) << r.method << std::setw(8)
              << r.oracle << std::setw(10) << (r.agree ? "yes" : "FLAGGED")
              << (r.single_step_sufficient ? "yes" : "no") << "\n";
  }
  c.result = {{"schema", json_io::kSchema}, {"suite", suite}, {"degree_bound", rc.degree_bound},
              {"mode", rc.mode}, {"rows", out}, {"mismatches", mismatches}};
  return c;
}

Command cmd_exercise1(const RunConfig& rc) {
  RunConfig two = rc;
  two.n = 2;
  two.degree_bound = std::max(2, std::min(rc.degree_bound, 2));
  const auto a = precat_of(fixtures::composable_pair(), two);
  auto res = build_f0(a, two.resolution());
  const auto& w = res.f0->complex();
  const auto& sup = w.support();
  const auto ind = induced_map(*res.f0, a, res.f0_to_base);
  json cells = json::array();
  for (std::uint32_t i = 0; i < w.size(); ++i) {
    const auto& cell = w.cell(i);
    json faces = json::array();
    for (std::size_t f = 0; f < cell.attachment.size(); ++f) {
      const auto l = *w.boundary().face_source(cell.shape);
      faces.push_back(a.label(l, ind(l, res.f0->attachment_element(i, f))));
    }
    cells.push_back({{"shape", sup.shape(cell.shape).str()},
                     {"over", a.label(cell.shape, res.f0_to_base.images[i])},
                     {"faces_over", faces}});
  }
  LiftingContext ctx{res.f0->precat(), a, ind, res.f0->boundary()};
  const auto verdict = satisfies_lifting(ctx);
  Command c;
  c.pass_limit_hit = !res.fixpoint();
  c.result = {{"schema", json_io::kSchema},
              {"n", 2},
              {"degree_bound", two.degree_bound},
              {"census", json_io::to_json(w)["census"]},
              {"cells", cells},
              {"report", json_io::to_json(res.f0_report)},
              {"lifting", {{"ok", verdict.ok}, {"squares", verdict.squares}}},
              {"f0_is_ncategory", is_ncategory(res.f0->precat()).ok}};
  return c;
}

Command cmd_exercise2(const RunConfig& rc, const std::string& shape, const std::string& b) {
  const auto target = precat_of(json_io::load_category(b), rc);
  auto bs = BoundaryStructure::make(target.support_ptr(), rc.boundary_mode());
  const auto m = parse_shape(shape);
  const auto w = representable_complex(bs, m).complex;
  const auto ms = enumerate_maps(w, target);
  json cells = json::array();
  for (std::uint32_t i = 0; i < w.size(); ++i) {
    json att = json::array();
    for (const auto& r : w.cell(i).attachment) att.push_back(r.cell);
    cells.push_back({{"cell", i},
                     {"shape", w.support().shape(w.cell(i).shape).str()},
                     {"attached_to", att},
                     {"level_size", target.size(w.cell(i).shape)},
                     {"visits", ms.stats.visits[i]},
                     {"candidates", ms.stats.candidates[i]}});
  }
  Command c;
  c.result = {{"schema", json_io::kSchema}, {"shape", json_io::to_json(m)}, {"target", b},
              {"cells", cells}, {"maps", ms.maps.size()}, {"nodes", ms.stats.nodes},
              {"dead_ends", ms.stats.dead_ends}};
  return c;
}

void emit(const RunConfig& rc, const json& j) {
  const auto text = j.dump(2) + "\n";
  if (rc.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(rc.out);
  if (!f) throw ValidationError("cannot write " + rc.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy classes of maps between small n-categories"};
  app.require_subcommand(1);
  RunConfig rc;
  app.add_option("--n", rc.n, "categorical dimension (1 or 2)")->capture_default_str();
  app.add_option("--degree-bound", rc.degree_bound, "largest shape entry")->capture_default_str();
  app.add_option("--pass-limit", rc.pass_limit, "completion sweeps")->capture_default_str();
  app.add_option("--mode", rc.mode, "boundary: free | full (n = 1 only)")->capture_default_str();
  app.add_option("--out", rc.out, "write JSON here instead of stdout");
  app.add_option("--seed", rc.seed, "seed for randomized commands")->capture_default_str();

  std::function<Command()> run;

  auto* theta = app.add_subcommand("theta", "hom sets, composition, faces, shapes");
  // Separate scalar positionals: CLI11 would read "[1,2]" as a list.
  std::string theta_op, theta_x, theta_y;
  theta->add_option("op", theta_op, "hom | compose | shapes | faces")->required();
  theta->add_option("x", theta_x);
  theta->add_option("y", theta_y);
  theta->callback([&] {
    run = [&] {
      std::vector<std::string> args;
      for (const auto* s : {&theta_x, &theta_y}) {
        if (!s->empty()) args.push_back(*s);
      }
      return cmd_theta(rc, theta_op, args);
    };
  });

  auto* bnd = app.add_subcommand("boundary", "boundary complex of a shape against its presheaf");
  std::string bnd_shape;
  bnd->add_option("shape", bnd_shape)->required();
  bnd->callback([&] { run = [&] { return cmd_boundary(rc, bnd_shape); }; });

  auto* res = app.add_subcommand("resolve", "F0 => F1 (-> F2) for a category");
  std::string res_a;
  bool res_f2 = false;
  res->add_option("category", res_a)->required();
  res->add_flag("--f2", res_f2, "also build the latching object and F2");
  res->callback([&] { run = [&] { return cmd_resolve(rc, res_a, res_f2); }; });

  auto* maps = app.add_subcommand("maps", "maps from h(M) or a resolution stage into B");
  std::string maps_b, maps_shape = "[1]", maps_from;
  int maps_stage = 0;
  maps->add_option("target", maps_b)->required();
  maps->add_option("--shape", maps_shape, "representable source")->capture_default_str();
  maps->add_option("--from", maps_from, "category whose resolution is the source");
  maps->add_option("--stage", maps_stage, "0 or 1 with --from")->capture_default_str();
  maps->callback([&] { run = [&] { return cmd_maps(rc, maps_b, maps_shape, maps_from, maps_stage); }; });

  auto* hc = app.add_subcommand("homclasses", "homotopy classes of maps A -> B");
  std::string hc_a, hc_b;
  bool hc_oracle = false;
  hc->add_option("a", hc_a)->required();
  hc->add_option("b", hc_b)->required();
  hc->add_flag("--oracle", hc_oracle, "compare with natural isomorphism classes");
  hc->callback([&] { run = [&] { return cmd_homclasses(rc, hc_a, hc_b, hc_oracle); }; });

  auto* msp = app.add_subcommand("mapping-space", "levels of Hom(F, B)");
  std::string ms_a, ms_b;
  int ms_levels = 2;
  msp->add_option("a", ms_a)->required();
  msp->add_option("b", ms_b)->required();
  msp->add_option("--levels", ms_levels, "1, 2 or 3")->check(CLI::Range(1, 3))->capture_default_str();
  msp->callback([&] { run = [&] { return cmd_mapping_space(rc, ms_a, ms_b, ms_levels); }; });

  auto* chk = app.add_subcommand("check", "is the nerve an n-category");
  std::string chk_b;
  chk->add_option("category", chk_b)->required();
  chk->callback([&] { run = [&] { return cmd_check(rc, chk_b); }; });

  auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
  std::string orc_what, orc_a, orc_b;
  int orc_bound = 2;
  orc->add_option("subject", orc_what, "homcat | theta")->required();
  orc->add_option("a", orc_a);
  orc->add_option("b", orc_b);
  orc->add_option("--bound", orc_bound, "entry bound for theta")->capture_default_str();
  orc->callback([&] {
    run = [&] {
      std::vector<std::string> args;
      for (const auto* s : {&orc_a, &orc_b}) {
        if (!s->empty()) args.push_back(*s);
      }
      return cmd_oracle(rc, orc_what, args, orc_bound);
    };
  });

  auto* rep = app.add_subcommand("report", "method against oracle over a suite");
  std::string rep_suite = "acceptance";
  rep->add_option("--suite", rep_suite, "acceptance | discrepancy")->capture_default_str();
  rep->callback([&] { run = [&] { return cmd_report(rc, rep_suite); }; });

  auto* ex1 = app.add_subcommand("exercise1", "F0 of the composable pair as a 2-category");
  ex1->callback([&] { run = [&] { return cmd_exercise1(rc); }; });

  auto* ex2 = app.add_subcommand("exercise2", "cell-by-cell map search statistics");
  std::string ex2_shape = "[1]", ex2_b = "arrow";
  ex2->add_option("--shape", ex2_shape)->capture_default_str();
  ex2->add_option("--target", ex2_b)->capture_default_str();
  ex2->callback([&] { run = [&] { return cmd_exercise2(rc, ex2_shape, ex2_b); }; });

  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInvalid;
  }
  try {
    rc.validate();
    const auto c = run();
    emit(rc, c.result);
    if (c.pass_limit_hit) {
      std::cerr << "pass limit " << rc.pass_limit << " reached before a fixpoint\n";
      return kPassLimit;
    }
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const BoundError& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return kTooLarge;
  }
}
