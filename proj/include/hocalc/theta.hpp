#pragma once

// Combinatorics of the index category Theta^n.
//
// An object is a sequence M = (m_1, ..., m_k) with k <= n and every m_i >= 1;
// the empty sequence is the point. Padding with zeros gives an object of
// Delta^n, and Theta^n is the quotient in which coordinates after a zero
// collapse. A morphism is stored in canonical form: its tuple of monotone
// components, truncated at the first constant component (inclusive).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hocalc {

class ThetaShape {
 public:
  ThetaShape() = default;
  explicit ThetaShape(std::vector<int> entries);

  static ThetaShape point() { return ThetaShape{}; }

  const std::vector<int>& entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }
  bool is_point() const { return entries_.empty(); }
  // Entry at position i (0-based), zero beyond the length.
  int padded(int i) const { return i < length() ? entries_[i] : 0; }
  int last() const { return entries_.back(); }
  int degree() const;
  int max_entry() const;

  // Drops the last entry (the source of the face maps).
  ThetaShape hat() const;
  ThetaShape prefix(int i) const;

  // Throws ValidationError unless length <= n and all entries >= 1.
  void validate(int n) const;

  std::string str() const;

  auto operator<=>(const ThetaShape&) const = default;

 private:
  std::vector<int> entries_;
};

// Canonical enumeration order: total degree, then length, then lexicographic.
bool shape_order_less(const ThetaShape& a, const ThetaShape& b);

// A monotone map [a] -> [b], given by its value table of length a+1.
class MonotoneMap {
 public:
  MonotoneMap(int target_size, std::vector<int> values);

  static MonotoneMap constant(int source_size, int target_size, int value);
  static MonotoneMap identity(int size);

  int source_size() const { return static_cast<int>(values_.size()) - 1; }
  int target_size() const { return target_; }
  int operator()(int i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }
  bool is_constant() const;
  bool is_surjective() const;

  auto operator<=>(const MonotoneMap&) const = default;

 private:
  int target_;
  std::vector<int> values_;
};

// second o first.
MonotoneMap then(const MonotoneMap& first, const MonotoneMap& second);

// All monotone maps [a] -> [b] in lexicographic order of value tables.
std::vector<MonotoneMap> all_monotone_maps(int a, int b);

struct ThetaMorphism {
  ThetaShape source;
  ThetaShape target;
  std::vector<MonotoneMap> components;

  int length() const { return static_cast<int>(components.size()); }
  std::string str() const;

  bool operator==(const ThetaMorphism&) const = default;
};

// Ordering used everywhere: lexicographic on component value tables, a
// proper prefix first; source and target break remaining ties.
bool morphism_less(const ThetaMorphism& a, const ThetaMorphism& b);

// Throws ValidationError if the canonical-form invariants fail.
void validate_morphism(const ThetaMorphism& a);

// raw holds one component per coordinate of the zero-padded shapes
// (raw.size() is the ambient n).
ThetaMorphism canonicalize(const ThetaShape& source, const ThetaShape& target,
                           std::span<const MonotoneMap> raw);

ThetaMorphism identity(const ThetaShape& m);

// All canonical morphisms n -> m, ordered by morphism_less.
std::vector<ThetaMorphism> hom_set(const ThetaShape& n, const ThetaShape& m);

// g: N -> P, f: P -> M, returns f o g: N -> M.
ThetaMorphism compose(const ThetaMorphism& g, const ThetaMorphism& f);

// The m_k + 1 maps hat(M) -> M; the i-th is (id, ..., id, const i).
std::vector<ThetaMorphism> faces(const ThetaShape& m);

// True iff a factors through one of the faces of its target.
bool in_boundary(const ThetaMorphism& a);

std::vector<ThetaShape> enumerate_shapes(int n, int degree_bound);

}  // namespace hocalc
