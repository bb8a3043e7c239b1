#include <doctest.h>

#include "hocalc/error.hpp"
#include "hocalc/fixtures.hpp"
#include "hocalc/lifting.hpp"
#include "hocalc/nerve.hpp"
#include "hocalc/random.hpp"
#include "hocalc/segal.hpp"

using namespace hocalc;

namespace {

PrecatMap to_terminal(const Precat& x) {
  PrecatMap f;
  for (ShapeId l = 0; l < x.support().size(); ++l) f.levels.emplace_back(x.size(l), 0);
  return f;
}

Completion complete_from_empty(const Precat& v) {
  CellComplex empty(BoundaryStructure::make(v.support_ptr()));
  return small_way(empty, v, ComplexMap{});
}

CellComplex points(int n, int d, int count) {
  CellComplex w(BoundaryStructure::make(n, d));
  for (int i = 0; i < count; ++i) w.push_back(Cell{0, {}, "p" + std::to_string(i)});
  return w;
}

}  // namespace

TEST_CASE("completion over a point") {
  auto v = nerve(fixtures::point(), 3);
  auto c = complete_from_empty(v);
  CHECK(c.evaluation.complex().size() == 1);
  CHECK(c.report.fixpoint);
  CHECK(c.report.passes <= 2);
}

TEST_CASE("completion over the walking arrow") {
  auto v = nerve(fixtures::arrow(), 3);
  auto c = complete_from_empty(v);
  const auto census = c.evaluation.complex().census();
  CHECK(c.evaluation.complex().size() == 3);
  CHECK(census[0] == 2);
  CHECK(census[1] == 1);
  CHECK(c.report.fixpoint);
  CHECK(c.report.passes == 2);
  CHECK(c.report.total_added() == 3);
  LiftingContext ctx{c.evaluation.precat(), v, c.induced, c.evaluation.boundary()};
  CHECK(satisfies_lifting(ctx).ok);
  CHECK_FALSE(check_natural(c.evaluation.precat(), v, c.induced));
}

TEST_CASE("completing two points over a point connects them both ways") {
  auto w = points(1, 2, 2);
  auto t = terminal(w.boundary().support_ptr());
  auto c = small_way(w, t, ComplexMap{{0, 0}});
  const auto& cx = c.evaluation.complex();
  bool ab = false, ba = false;
  for (const auto& cell : cx.cells()) {
    if (cell.shape != 1) continue;
    if (cell.attachment[0].cell == 0 && cell.attachment[1].cell == 1) ab = true;
    if (cell.attachment[0].cell == 1 && cell.attachment[1].cell == 0) ba = true;
  }
  CHECK(ab);
  CHECK(ba);
  CHECK(c.report.fixpoint);

  // Rerunning at the fixpoint adds nothing.
  auto again = small_way(cx, t, c.map);
  CHECK(again.report.total_added() == 0);
  CHECK(again.report.passes == 1);
}

TEST_CASE("find_lift examples") {
  auto bs = BoundaryStructure::make(1, 2);
  const auto& sup = bs->support();
  const ShapeId one = sup.id(ThetaShape({1}));

  auto w1 = evaluate(points(1, 2, 1));
  auto t = terminal(bs->support_ptr());
  auto f1 = to_terminal(w1.precat());
  LiftingContext c1{w1.precat(), t, f1, *bs};
  CHECK(find_lift(c1, LiftSquare{one, {0, 0}, 0}) == Elem{0});

  auto v = nerve(fixtures::arrow(), 2);
  ComplexEvaluation w2(points(1, 2, 2));
  ComplexMap g{{0, 1}};
  auto f2 = induced_map(w2, v, g);
  Elem f = 0;
  while (v.label(one, f) != "f") ++f;
  LiftingContext c2{w2.precat(), v, f2, *bs};
  CHECK_FALSE(find_lift(c2, LiftSquare{one, {0, 1}, f}));
  CHECK_THROWS_AS(find_lift(c2, LiftSquare{one, {1, 0}, f}), ValidationError);
  CHECK_THROWS_AS(find_lift(c2, LiftSquare{one, {0}, f}), ValidationError);

  auto squares = enumerate_squares(c2, one);
  CHECK(squares.size() == 3);
  auto verdict = satisfies_lifting(c2);
  CHECK_FALSE(verdict.ok);
  REQUIRE(verdict.witness);
  CHECK(verdict.witness->shape == one);

  w2.attach(Cell{one, {{0, 0}, {1, 0}}, "e"});
  g.images.push_back(f);
  auto f3 = induced_map(w2, v, g);
  LiftingContext c3{w2.precat(), v, f3, *bs};
  CHECK(find_lift(c3, LiftSquare{one, {0, 1}, f}));
}

TEST_CASE("square enumeration counts") {
  auto v = nerve(fixtures::iso(), 2);
  ComplexEvaluation empty(BoundaryStructure::make(1, 2));
  PrecatMap none;
  for (ShapeId l = 0; l < v.support().size(); ++l) none.levels.emplace_back();
  LiftingContext c{empty.precat(), v, none, empty.boundary()};
  CHECK(enumerate_squares(c, 0).size() == v.size(0));

  auto bs = BoundaryStructure::make(1, 2);
  auto w = evaluate(points(1, 2, 1));
  auto t = terminal(bs->support_ptr());
  auto f = to_terminal(w.precat());
  LiftingContext cp{w.precat(), t, f, *bs};
  CHECK(enumerate_squares(cp, 1).size() == 1);
  auto id = identity_map(v);
  CHECK(satisfies_lifting(LiftingContext{v, v, id, *bs}).ok);
}

TEST_CASE("nerves are 1-categories") {
  for (const auto& name : fixtures::names()) {
    auto r = is_ncategory(nerve(fixtures::by_name(name), 3));
    CHECK_MESSAGE(r.ok, name << ": " << r.witness);
  }
  CHECK(is_ncategory(terminal(ThetaSupport::make(1, 3))).ok);
}

TEST_CASE("the completed pair of points is not a 1-category") {
  auto w = points(1, 3, 2);
  auto t = terminal(w.boundary().support_ptr());
  auto c = small_way(w, t, ComplexMap{{0, 0}});
  LiftingContext ctx{c.evaluation.precat(), t, c.induced, c.evaluation.boundary()};
  CHECK(satisfies_lifting(ctx).ok);
  auto r = is_ncategory(c.evaluation.precat());
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("no element over the composable chain") != std::string::npos);
}

TEST_CASE("equivalences of nerves") {
  auto iso = nerve(fixtures::iso(), 3);
  auto pt = nerve(fixtures::point(), 3);
  auto arrow = nerve(fixtures::arrow(), 3);
  CHECK(is_equivalence(iso, iso, identity_map(iso)).ok);
  CHECK(is_equivalence(iso, pt, to_terminal(iso)).ok);
  auto r = is_equivalence(arrow, pt, to_terminal(arrow));
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("not full") != std::string::npos);

  auto w = evaluate(points(1, 3, 2));
  auto t = terminal(ThetaSupport::make(1, 3));
  CHECK_FALSE(is_equivalence(w.precat(), t, to_terminal(w.precat())).ok);
  auto c = small_way(w.complex(), t, ComplexMap{{0, 0}});
  CHECK_THROWS_AS(is_equivalence(c.evaluation.precat(), t, c.induced), ValidationError);
}

TEST_CASE("underlying category of a nerve") {
  auto x = nerve(fixtures::retract(), 3);
  auto u = underlying_category(x);
  CHECK(u.category.object_count() == 2);
  CHECK(u.category.arrow_count() == 5);
  CHECK_NOTHROW(u.category.validate());
}

TEST_CASE("2-categories") {
  for (const auto& name : fixtures::names()) {
    auto p = promote(nerve(fixtures::by_name(name), 2));
    auto r = is_ncategory(p);
    CHECK_MESSAGE(r.ok, name << ": " << r.witness);
  }
  auto h = representable(ThetaSupport::make(2, 2), ThetaShape({1, 1}));
  CHECK(is_ncategory(h).ok);
  CHECK_THROWS_AS(is_ncategory(terminal(ThetaSupport::make(2, 1))), ValidationError);

  auto iso = promote(nerve(fixtures::iso(), 2));
  auto pt = promote(nerve(fixtures::point(), 2));
  auto arrow = promote(nerve(fixtures::arrow(), 2));
  CHECK(is_equivalence(iso, iso, identity_map(iso)).ok);
  CHECK(is_equivalence(iso, pt, to_terminal(iso)).ok);
  CHECK_FALSE(is_equivalence(arrow, pt, to_terminal(arrow)).ok);
}

TEST_CASE("slices") {
  auto c = fixtures::composable_pair();
  auto p = promote(nerve(c, 2));
  for (std::uint32_t x = 0; x < 3; ++x) {
    for (std::uint32_t y = 0; y < 3; ++y) {
      std::size_t hom = 0;
      for (std::uint32_t a = 0; a < c.arrow_count(); ++a) {
        if (c.arrow(a).src == x && c.arrow(a).dst == y) ++hom;
      }
      auto s = slice(p, 1, {x, y});
      for (auto n : s.object.level_sizes()) CHECK(n == hom);
      CHECK_FALSE(s.object.check());
    }
  }
  auto h = representable(ThetaSupport::make(2, 2), ThetaShape({1, 1}));
  auto s = slice(h, 1, {0, 1});
  CHECK(s.object.level_sizes() == std::vector<std::size_t>{2, 3, 4});
  CHECK_THROWS_AS(slice(h, 1, {0}), ValidationError);
}

TEST_CASE("slice reduction") {
  auto bs = BoundaryStructure::make(2, 2);
  auto h = representable(bs->support_ptr(), ThetaShape({1, 1}));
  auto p = promote(nerve(fixtures::iso(), 2));
  for (const auto& m : bs->support().shapes()) {
    if (m.is_point()) continue;
    auto r = slice_reduction_check(h, h, identity_map(h), m);
    CHECK_MESSAGE(r.result.ok, r.result.witness);
    auto q = slice_reduction_check(p, p, identity_map(p), m);
    CHECK(q.result.ok);
    CHECK(q.squares == q.lifted);
  }

  std::mt19937_64 rng(11);
  std::size_t squares = 0, lifted = 0;
  for (int trial = 0; trial < 6; ++trial) {
    auto w = evaluate(random_complex(bs, rng, 2, 6));
    auto t = terminal(bs->support_ptr());
    auto f = to_terminal(w.precat());
    for (const auto& m : bs->support().shapes()) {
      if (m.is_point()) continue;
      auto r = slice_reduction_check(w.precat(), t, f, m);
      CHECK_MESSAGE(r.result.ok, r.result.witness);
      squares += r.squares;
      lifted += r.lifted;
    }
  }
  CHECK(squares > 100);
  CHECK(lifted < squares);
}
