#include "hocalc/fixtures.hpp"

#include "hocalc/error.hpp"

namespace hocalc::fixtures {

FiniteCategory point() {
  FiniteCategory c;
  c.name = "point";
  c.add_object("0");
  return c;
}

FiniteCategory arrow() {
  FiniteCategory c;
  c.name = "arrow";
  auto x = c.add_object("0");
  auto y = c.add_object("1");
  c.add_arrow("f", x, y);
  return c;
}

FiniteCategory iso() {
  FiniteCategory c;
  c.name = "iso";
  auto x = c.add_object("0");
  auto y = c.add_object("1");
  auto u = c.add_arrow("u", x, y);
  auto v = c.add_arrow("v", y, x);
  c.set_composite(u, v, c.identity(x));
  c.set_composite(v, u, c.identity(y));
  return c;
}

FiniteCategory composable_pair() {
  FiniteCategory c;
  c.name = "composable_pair";
  auto x = c.add_object("0");
  auto y = c.add_object("1");
  auto z = c.add_object("2");
  auto f = c.add_arrow("f", x, y);
  auto g = c.add_arrow("g", y, z);
  auto gf = c.add_arrow("gf", x, z);
  c.set_composite(f, g, gf);
  return c;
}

FiniteCategory parallel_pair() {
  FiniteCategory c;
  c.name = "parallel_pair";
  auto x = c.add_object("0");
  auto y = c.add_object("1");
  c.add_arrow("f", x, y);
  c.add_arrow("g", x, y);
  return c;
}

FiniteCategory z2() {
  FiniteCategory c;
  c.name = "z2";
  auto x = c.add_object("*");
  auto g = c.add_arrow("g", x, x);
  c.set_composite(g, g, c.identity(x));
  return c;
}

FiniteCategory retract() {
  FiniteCategory c;
  c.name = "retract";
  auto a = c.add_object("a");
  auto b = c.add_object("b");
  auto u = c.add_arrow("u", a, b);
  auto v = c.add_arrow("v", b, a);
  auto e = c.add_arrow("e", b, b);
  c.set_composite(u, v, c.identity(a));
  c.set_composite(v, u, e);
  c.set_composite(e, e, e);
  c.set_composite(u, e, u);
  c.set_composite(e, v, v);
  return c;
}

std::vector<std::string> names() {
  return {"point", "arrow", "iso", "composable_pair", "parallel_pair", "z2", "retract"};
}

FiniteCategory by_name(const std::string& name) {
  if (name == "point") return point();
  if (name == "arrow") return arrow();
  if (name == "iso") return iso();
  if (name == "composable_pair") return composable_pair();
  if (name == "parallel_pair") return parallel_pair();
  if (name == "z2") return z2();
  if (name == "retract") return retract();
  throw ValidationError("unknown fixture '" + name + "'");
}

}  // namespace hocalc::fixtures
