#include <doctest.h>

#include "hocalc/error.hpp"
#include "hocalc/fixtures.hpp"
#include "hocalc/nerve.hpp"
#include "hocalc/precat.hpp"

using namespace hocalc;

namespace {

std::vector<std::size_t> sizes(const Precat& x) { return x.level_sizes(); }

}  // namespace

TEST_CASE("representable level sizes") {
  auto s1 = ThetaSupport::make(1, 2);
  auto h1 = representable(s1, ThetaShape({1}));
  CHECK(sizes(h1) == std::vector<std::size_t>{2, 3, 4});
  CHECK_FALSE(h1.check());

  auto pt = representable(s1, ThetaShape::point());
  for (auto n : sizes(pt)) CHECK(n == 1);

  auto s2 = ThetaSupport::make(2, 1);
  auto h11 = representable(s2, ThetaShape({1, 1}));
  CHECK(h11.size(s2->id(ThetaShape({1, 1}))) == 5);
  CHECK_FALSE(h11.check());
}

TEST_CASE("boundary level sizes") {
  auto s1 = ThetaSupport::make(1, 3);
  auto b2 = boundary(s1, ThetaShape({2}));
  for (auto n : sizes(b2.object)) CHECK(n == 3);
  CHECK_FALSE(b2.object.check());
  CHECK_FALSE(check_natural(b2.object, representable(s1, ThetaShape({2})), b2.inclusion));

  auto s2 = ThetaSupport::make(2, 1);
  auto b11 = boundary(s2, ThetaShape({1, 1}));
  CHECK(sizes(b11.object) == std::vector<std::size_t>{2, 4, 4});

  auto bp = boundary(s1, ThetaShape::point());
  for (auto n : sizes(bp.object)) CHECK(n == 0);
}

TEST_CASE("functoriality checker catches a broken table") {
  auto s1 = ThetaSupport::make(1, 2);
  auto h = representable(s1, ThetaShape({1}));
  const ShapeId one = s1->id(ThetaShape({1}));
  h.set_restriction(0, one, 0, 1, 1);
  CHECK(h.check());
}

TEST_CASE("nerve level sizes") {
  auto a = nerve(fixtures::arrow(), 3);
  CHECK(sizes(a) == std::vector<std::size_t>{2, 3, 4, 5});
  CHECK_FALSE(a.check());

  auto p = nerve(fixtures::point(), 3);
  for (auto n : sizes(p)) CHECK(n == 1);

  for (const auto& name : fixtures::names()) {
    auto x = nerve(fixtures::by_name(name), 3);
    CHECK_MESSAGE(!x.check(), name);
  }
}

TEST_CASE("promote is constant in the second direction") {
  auto c = nerve(fixtures::composable_pair(), 2);
  auto p = promote(c);
  const auto& sup = p.support();
  CHECK(p.size(sup.id(ThetaShape({1}))) == 6);
  CHECK(p.size(sup.id(ThetaShape({1, 2}))) == 6);
  CHECK(p.size(sup.id(ThetaShape({2, 1}))) == c.size(2));
  CHECK_FALSE(p.check());
}

TEST_CASE("pullback") {
  auto s = ThetaSupport::make(1, 2);
  auto x = nerve(fixtures::iso(), 2);
  auto id = identity_map(x);
  auto pb = pullback(x, x, id, id);
  CHECK(pb.object.level_sizes() == x.level_sizes());
  CHECK_FALSE(pb.object.check());

  auto t = terminal(s);
  auto tt = pullback(t, t, identity_map(t), identity_map(t));
  for (auto n : tt.object.level_sizes()) CHECK(n == 1);

  // Maps of x to the point: every pair matches.
  PrecatMap bang;
  for (ShapeId l = 0; l < s->size(); ++l) bang.levels.emplace_back(x.size(l), 0);
  auto prod = pullback(x, x, bang, bang);
  for (ShapeId l = 0; l < s->size(); ++l) CHECK(prod.object.size(l) == x.size(l) * x.size(l));
  CHECK_FALSE(check_natural(prod.object, x, prod.first));
  CHECK_FALSE(check_natural(prod.object, x, prod.second));
}

TEST_CASE("category validation") {
  FiniteCategory c;
  auto x = c.add_object("x");
  c.add_arrow("g", x, x);
  CHECK_THROWS_AS(c.validate(), ValidationError);
  for (const auto& name : fixtures::names()) CHECK_NOTHROW(fixtures::by_name(name).validate());
}
