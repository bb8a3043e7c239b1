#include <doctest.h>

#include <chrono>

#include "hocalc/crosscheck.hpp"
#include "hocalc/error.hpp"
#include "hocalc/fixtures.hpp"
#include "hocalc/oracle.hpp"

using namespace hocalc;
using namespace hocalc::oracle;

TEST_CASE("functor counts") {
  const auto arrow = fixtures::arrow();
  const auto iso = fixtures::iso();
  CHECK(enumerate_functors(arrow, arrow).size() == 3);
  CHECK(enumerate_functors(iso, arrow).size() == 2);
  CHECK(enumerate_functors(iso, iso).size() == 4);
  for (const auto& name : fixtures::names()) {
    const auto b = fixtures::by_name(name);
    CHECK(enumerate_functors(fixtures::point(), b).size() == b.object_count());
  }
  // Z/2 -> Z/2: identity and the trivial functor
  CHECK(enumerate_functors(fixtures::z2(), fixtures::z2()).size() == 2);
  // parallel pair -> arrow: both f and g go to the same place
  CHECK(enumerate_functors(fixtures::parallel_pair(), arrow).size() == 3);
}

TEST_CASE("natural isomorphism classes") {
  const auto arrow = fixtures::arrow();
  const auto iso = fixtures::iso();
  auto fa = enumerate_functors(arrow, arrow);
  auto pa = natural_iso_classes(fa, arrow, arrow);
  CHECK(pa.classes == 3);
  CHECK(pa.equivalence());
  auto fi = enumerate_functors(iso, iso);
  auto pi = natural_iso_classes(fi, iso, iso);
  CHECK(pi.classes == 1);
  CHECK(pi.equivalence());
}

TEST_CASE("homotopy category hom sets") {
  CHECK(ho_cat_hom(fixtures::arrow(), fixtures::arrow()).count == 3);
  CHECK(ho_cat_hom(fixtures::iso(), fixtures::arrow()).count == 2);
  CHECK(ho_cat_hom(fixtures::point(), fixtures::arrow()).count == 2);
  CHECK(ho_cat_hom(fixtures::point(), fixtures::iso()).count == 1);
  CHECK(ho_cat_hom(fixtures::point(), fixtures::point()).count == 1);
  CHECK(ho_cat_hom(fixtures::point(), fixtures::retract()).count == 2);
  for (const auto& a : fixtures::names()) {
    for (const auto& b : fixtures::names()) {
      auto h = ho_cat_hom(fixtures::by_name(a), fixtures::by_name(b));
      CHECK_MESSAGE(h.partition.equivalence(), a << " -> " << b);
      CHECK(h.representatives.size() == h.count);
    }
    const auto c = fixtures::by_name(a);
    CHECK(ho_cat_hom(fixtures::point(), c).count == object_iso_classes(c));
  }
}

TEST_CASE("congruence closure examples") {
  auto c = theta_congruence_closure(2, 1);
  const ClosureClasses* h = nullptr;
  for (const auto& x : c.homs) {
    if (x.source == std::vector<int>{1, 0} && x.target == std::vector<int>{1, 1}) h = &x;
  }
  REQUIRE(h);
  CHECK(h->morphisms.size() == 6);
  CHECK(h->classes == 4);
  // (const 0, pick w) for both w are identified
  std::vector<std::size_t> const0;
  for (std::size_t r = 0; r < h->morphisms.size(); ++r) {
    if (h->morphisms[r].components[0] == std::vector<int>{0, 0}) const0.push_back(r);
  }
  REQUIRE(const0.size() == 2);
  CHECK(h->class_of[const0[0]] == h->class_of[const0[1]]);
  // identities are alone
  for (const auto& x : c.homs) {
    if (x.source != x.target) continue;
    for (std::size_t r = 0; r < x.morphisms.size(); ++r) {
      bool ident = true;
      for (std::size_t k = 0; k < x.source.size(); ++k) {
        for (int i = 0; i <= x.source[k]; ++i) ident = ident && x.morphisms[r].components[k][i] == i;
      }
      if (!ident) continue;
      std::size_t size = 0;
      for (auto cl : x.class_of) size += cl == x.class_of[r];
      CHECK(size == 1);
    }
  }
  CHECK_THROWS_AS(theta_congruence_closure(5, 2), BoundError);
}

TEST_CASE("congruence property") {
  CHECK(congruence_failures(theta_congruence_closure(2, 2)) == 0);
  CHECK(congruence_failures(theta_congruence_closure(3, 1)) == 0);
}

TEST_CASE("closure agrees with canonical forms") {
  for (int n = 1; n <= 3; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    auto c = theta_congruence_closure(n, 2);
    auto r = compare_with_canonicalize(c);
    for (const auto& m : r.mismatches) FAIL_CHECK(m);
    CHECK(r.ok);
    if (n > 1) CHECK(r.morphisms > r.classes);
    MESSAGE("n=" << n << " morphisms=" << r.morphisms << " classes=" << r.classes << " in "
                 << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
                 << "s");
  }
}
