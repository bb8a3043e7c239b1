#include <doctest.h>

#include <algorithm>
#include <random>

#include "hocalc/error.hpp"
#include "hocalc/fixtures.hpp"
#include "hocalc/homcalc.hpp"
#include "hocalc/nerve.hpp"
#include "hocalc/random.hpp"
#include "hocalc/segal.hpp"

using namespace hocalc;

namespace {

// Every Theta-morphism, not just faces.
void check_all_natural(const CellComplex& w, const Precat& b, const MapSet& ms) {
  ComplexEvaluation ev(w);
  for (const auto& m : ms.maps) {
    CHECK_FALSE(check_complex_map(w, b, m));
    CHECK_FALSE(check_natural(ev.precat(), b, induced_map(ev, b, m)));
  }
}

// Same presheaf with elements renumbered by a random permutation per level.
Precat relabel(const Precat& x, std::mt19937_64& rng, std::vector<std::vector<Elem>>& perm) {
  const auto& sup = x.support();
  Precat y(x.support_ptr());
  perm.assign(sup.size(), {});
  std::vector<std::vector<Elem>> inv(sup.size());
  for (ShapeId l = 0; l < sup.size(); ++l) {
    perm[l].resize(x.size(l));
    std::iota(perm[l].begin(), perm[l].end(), 0);
    std::shuffle(perm[l].begin(), perm[l].end(), rng);
    inv[l].resize(x.size(l));
    for (Elem e = 0; e < x.size(l); ++e) inv[l][perm[l][e]] = e;
    for (Elem e = 0; e < x.size(l); ++e) y.add_element(l, x.label(l, inv[l][e]));
  }
  for (ShapeId n = 0; n < sup.size(); ++n) {
    for (ShapeId m = 0; m < sup.size(); ++m) {
      for (MorId a = 0; a < sup.hom(n, m).size(); ++a) {
        for (Elem e = 0; e < x.size(m); ++e) {
          y.set_restriction(n, m, a, perm[m][e], perm[n][x.restrict(n, m, a, e)]);
        }
      }
    }
  }
  return y;
}

}  // namespace

TEST_CASE("maps out of representable complexes") {
  auto bs = BoundaryStructure::make(1, 3);
  auto b = nerve(fixtures::arrow(), 3);
  auto h1 = representable_complex(bs, ThetaShape({1}));
  auto ms = enumerate_maps(h1.complex, b);
  CHECK(ms.maps.size() == 3);
  check_all_natural(h1.complex, b, ms);
  CHECK(std::is_sorted(ms.maps.begin(), ms.maps.end(),
                       [](const auto& x, const auto& y) { return x.images < y.images; }));

  CellComplex pt(bs);
  pt.push_back(Cell{0, {}, "p"});
  for (const auto& name : fixtures::names()) {
    auto c = nerve(fixtures::by_name(name), 3);
    CHECK(enumerate_maps(pt, c).maps.size() == c.size(0));
    for (ShapeId m = 0; m < bs->support().size(); ++m) {
      auto r = representable_complex(bs, bs->support().shape(m));
      CHECK(enumerate_maps(r.complex, c).maps.size() == c.size(m));
    }
  }
  CHECK_THROWS_AS(enumerate_maps(h1.complex, nerve(fixtures::arrow(), 2)), ValidationError);
  CHECK_THROWS_AS(enumerate_maps(h1.complex, b, MapSearchConfig{2}), BoundError);
}

TEST_CASE("representability on random presheaves") {
  // Random complexes evaluate to valid presheaves.
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 2; ++n) {
    auto bs = BoundaryStructure::make(n, 2);
    for (int trial = 0; trial < 5; ++trial) {
      auto b = evaluate(random_complex(bs, rng, 2, 5)).precat();
      for (ShapeId m = 0; m < bs->support().size(); ++m) {
        auto r = representable_complex(bs, bs->support().shape(m));
        auto ms = enumerate_maps(r.complex, b);
        CHECK(ms.maps.size() == b.size(m));
        check_all_natural(r.complex, b, ms);
      }
    }
  }
}

TEST_CASE("maps out of F1 of a point") {
  auto res = resolve(nerve(fixtures::point(), 3));
  auto ms = enumerate_maps(res.f1->complex(), nerve(fixtures::arrow(), 3));
  CHECK(ms.maps.size() == 2);
  CHECK(ms.stats.nodes >= ms.maps.size());
}

TEST_CASE("extensions") {
  auto res = resolve(nerve(fixtures::point(), 3));
  auto iso = nerve(fixtures::iso(), 3);
  const auto& w = res.f1->complex();
  for (Elem x = 0; x < 2; ++x) {
    for (Elem y = 0; y < 2; ++y) {
      auto h = find_extension(w, iso, {x, y});
      REQUIRE(h);
      CHECK(h->images[0] == x);
      CHECK(h->images[1] == y);
      CHECK_FALSE(check_complex_map(w, iso, *h));
      // the least extension is the first enumerated one with that prefix
      auto all = enumerate_maps(w, iso).maps;
      auto it = std::find_if(all.begin(), all.end(),
                             [&](const auto& m) { return m.images[0] == x && m.images[1] == y; });
      REQUIRE(it != all.end());
      CHECK(*it == *h);
    }
  }
  auto arrow = nerve(fixtures::arrow(), 3);
  CHECK_FALSE(find_extension(w, arrow, {0, 1}));
  CHECK(find_extension(w, arrow, {1, 1}));
  CHECK_THROWS_AS(find_extension(w, arrow, std::vector<Elem>(w.size() + 1, 0)), ValidationError);
}

TEST_CASE("extension agrees with enumeration on random prefixes") {
  std::mt19937_64 rng(17);
  auto bs = BoundaryStructure::make(1, 2);
  for (int trial = 0; trial < 20; ++trial) {
    auto w = random_complex(bs, rng, 3, 5);
    auto b = evaluate(random_complex(bs, rng, 2, 3)).precat();
    auto all = enumerate_maps(w, b).maps;
    for (std::size_t p = 0; p <= 3; ++p) {
      std::vector<Elem> prefix;
      for (std::size_t i = 0; i < p; ++i) {
        prefix.push_back(static_cast<Elem>(rng() % std::max<std::size_t>(1, b.size(0))));
      }
      if (b.size(0) == 0 && p > 0) continue;
      auto h = find_extension(w, b, prefix);
      auto it = std::find_if(all.begin(), all.end(), [&](const auto& m) {
        return std::equal(prefix.begin(), prefix.end(), m.images.begin());
      });
      CHECK(h.has_value() == (it != all.end()));
      if (h && it != all.end()) CHECK(*h == *it);
    }
  }
}

TEST_CASE("relation edges") {
  auto pt = resolve(nerve(fixtures::point(), 3));
  auto iso = nerve(fixtures::iso(), 3);
  auto maps = enumerate_maps(pt.f0->complex(), iso).maps;
  auto edges = relation_edges(pt, iso, maps);
  CHECK(edges.size() == 4);
  for (const auto& e : edges) CHECK_FALSE(check_complex_map(pt.f1->complex(), iso, e.witness));

  auto ar = resolve(nerve(fixtures::arrow(), 3));
  auto b = nerve(fixtures::arrow(), 3);
  auto am = enumerate_maps(ar.f0->complex(), b).maps;
  for (const auto& e : relation_edges(ar, b, am)) CHECK(e.from == e.to);
}

TEST_CASE("hom classes against hand counts") {
  struct Case {
    const char* a;
    const char* b;
    std::size_t classes;
  };
  for (auto c : {Case{"arrow", "arrow", 3}, Case{"iso", "arrow", 2}, Case{"point", "arrow", 2},
                 Case{"point", "iso", 1}, Case{"point", "point", 1}}) {
    auto res = resolve(nerve(fixtures::by_name(c.a), 3));
    auto hc = hom_classes(res, nerve(fixtures::by_name(c.b), 3));
    CHECK_MESSAGE(hc.classes == c.classes, c.a << " -> " << c.b);
    CHECK(hc.reflexive);
  }
}

TEST_CASE("hom classes ignore element numbering") {
  std::mt19937_64 rng(23);
  for (const char* a : {"point", "arrow", "iso"}) {
    auto res = resolve(nerve(fixtures::by_name(a), 2));
    for (const char* bn : {"arrow", "iso", "retract"}) {
      auto b = nerve(fixtures::by_name(bn), 2);
      std::vector<std::vector<Elem>> perm;
      auto pb = relabel(b, rng, perm);
      REQUIRE_FALSE(pb.check());
      auto x = hom_classes(res, b);
      auto y = hom_classes(res, pb);
      CHECK(x.classes == y.classes);
      CHECK(x.edges.size() == y.edges.size());
      CHECK(x.single_step_sufficient() == y.single_step_sufficient());
    }
  }
}

TEST_CASE("mapping space") {
  auto res = resolve(nerve(fixtures::point(), 2), ResolutionConfig{8, true});
  auto iso = nerve(fixtures::iso(), 2);
  auto ms = mapping_space(res, iso, 2);
  CHECK(ms.simplices[0].size() == 2);
  CHECK(ms.simplices[1].size() >= 2);
  for (const auto& f : ms.identity_failures) FAIL_CHECK(f);
  CHECK(ms.pi0 == 1);
  bool cross01 = false, cross10 = false;
  for (std::size_t x = 0; x < ms.simplices[1].size(); ++x) {
    cross01 = cross01 || (ms.faces[1][1][x] == 0 && ms.faces[1][0][x] == 1);
    cross10 = cross10 || (ms.faces[1][1][x] == 1 && ms.faces[1][0][x] == 0);
  }
  CHECK(cross01);
  CHECK(cross10);

  for (const char* a : {"point", "arrow", "iso"}) {
    auto r = resolve(nerve(fixtures::by_name(a), 3));
    for (const char* bn : {"point", "arrow", "iso"}) {
      auto b = nerve(fixtures::by_name(bn), 3);
      auto m = mapping_space(r, b, 1);
      CHECK(m.identity_failures.empty());
      CHECK(m.pi0 == hom_classes(r, b).classes);
    }
  }
  auto r = resolve(nerve(fixtures::point(), 3));
  auto retract = nerve(fixtures::retract(), 3);
  CHECK(mapping_space(r, retract, 1).pi0 == 1);
  CHECK_THROWS_AS(mapping_space(r, retract, 1, MapSearchConfig{100}), BoundError);
  CHECK_THROWS_AS(mapping_space(resolve(nerve(fixtures::point(), 2)), iso, 2), ValidationError);
}

TEST_CASE("comparison with the functor oracle") {
  auto suite = std::vector<SuiteEntry>{
      {"arrow", "arrow", fixtures::arrow(), fixtures::arrow()},
      {"point", "retract", fixtures::point(), fixtures::retract()},
      {"point", "point", fixtures::point(), fixtures::point()},
  };
  auto rep = discrepancy_report(suite, 3);
  CHECK(rep[0].agree);
  CHECK(rep[0].method == 3);
  CHECK_FALSE(rep[1].agree);
  CHECK(rep[1].method == 1);
  CHECK(rep[1].oracle == 2);
  REQUIRE(rep[1].witnesses.size() == 1);
  CHECK(rep[1].witnesses[0].first.images != rep[1].witnesses[0].second.images);
  CHECK(rep[2].agree);
  CHECK(rep[2].witnesses.empty());
}
