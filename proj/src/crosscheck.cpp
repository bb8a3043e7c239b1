#include "hocalc/crosscheck.hpp"

#include <map>

#include "hocalc/theta.hpp"

namespace hocalc {

namespace {

ThetaShape shape_of(const std::vector<int>& x) {
  std::vector<int> e;
  for (int v : x) {
    if (v == 0) break;
    e.push_back(v);
  }
  return ThetaShape(e);
}

}  // namespace

ClosureAgreement compare_with_canonicalize(const oracle::ThetaClosure& closure) {
  ClosureAgreement out;
  auto fail = [&](std::string what) {
    out.ok = false;
    if (out.mismatches.size() < 8) out.mismatches.push_back(std::move(what));
  };
  for (const auto& h : closure.homs) {
    const auto src = shape_of(h.source);
    const auto dst = shape_of(h.target);
    ++out.hom_pairs;
    out.classes += h.classes;
    std::map<std::size_t, ThetaMorphism> canon_of_class;
    std::map<std::string, std::size_t> class_of_canon;
    for (std::size_t r = 0; r < h.morphisms.size(); ++r) {
      ++out.morphisms;
      std::vector<MonotoneMap> raw;
      for (std::size_t k = 0; k < h.morphisms[r].components.size(); ++k) {
        raw.emplace_back(h.target[k], h.morphisms[r].components[k]);
      }
      const auto c = canonicalize(src, dst, raw);
      const auto cls = h.class_of[r];
      auto [it, fresh] = canon_of_class.emplace(cls, c);
      if (!fresh && !(it->second == c)) {
        fail(src.str() + " -> " + dst.str() + ": one class, forms " + it->second.str() + " and " +
             c.str());
      }
      auto [jt, fresh2] = class_of_canon.emplace(c.str(), cls);
      if (!fresh2 && jt->second != cls) {
        fail(src.str() + " -> " + dst.str() + ": form " + c.str() + " spans two classes");
      }
    }
    const auto expected = hom_set(src, dst).size();
    if (h.classes != expected) {
      fail(src.str() + " -> " + dst.str() + ": " + std::to_string(h.classes) + " classes vs " +
           std::to_string(expected) + " canonical morphisms");
    }
  }
  return out;
}

}  // namespace hocalc
