#pragma once

// Crossingless Temperley-Lieb diagrams.
//
// Boundary points of a (k, l) matching: bottom 0..k-1 left to right, then top
// k..k+l-1 left to right. Morphisms compose bottom to top: compose(f, g) puts
// g on top of f.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "skein/scalar.hpp"

namespace skein {

class PlanarMatching {
 public:
  PlanarMatching() = default;
  // Validates the involution and planarity.
  PlanarMatching(int bottom, int top, std::vector<uint16_t> pairing);

  int bottom() const { return k_; }
  int top() const { return l_; }
  int size() const { return k_ + l_; }
  int partner(int p) const { return pair_[p]; }
  const std::vector<uint16_t>& pairing() const { return pair_; }

  // Position in the cyclic boundary order (bottom left to right, then top
  // right to left) and back.
  int cyclic_position(int p) const { return p < k_ ? p : k_ + (k_ + l_ - 1 - p); }
  int point_at_cyclic(int c) const { return c < k_ ? c : k_ + (k_ + l_ - 1 - c); }

  bool operator==(const PlanarMatching& o) const {
    return k_ == o.k_ && l_ == o.l_ && pair_ == o.pair_;
  }
  bool operator!=(const PlanarMatching& o) const { return !(*this == o); }
  bool operator<(const PlanarMatching& o) const;

  size_t hash() const;
  std::string to_string() const;

  // Builds without validation; callers guarantee the invariants.
  static PlanarMatching trusted(int bottom, int top, std::vector<uint16_t> pairing);

 private:
  int k_ = 0;
  int l_ = 0;
  std::vector<uint16_t> pair_;
};

struct PlanarMatchingHash {
  size_t operator()(const PlanarMatching& m) const { return m.hash(); }
};

bool is_noncrossing(int bottom, int top, const std::vector<uint16_t>& pairing);

// All planar matchings of signature (k, l), in canonical order.
std::vector<PlanarMatching> enumerate_matchings(int bottom, int top);

// Result of gluing two matchings: the matching and the number of closed loops.
struct GlueResult {
  PlanarMatching matching;
  int loops = 0;
};
GlueResult glue(const PlanarMatching& lower, const PlanarMatching& upper);

using Term = std::pair<PlanarMatching, CycScalar>;

class TLMorphism {
 public:
  TLMorphism(Ring ring, int source, int target);
  // Terms may repeat and contain zeros; they are collected and sorted.
  TLMorphism(Ring ring, int source, int target, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  int source() const { return k_; }
  int target() const { return l_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  CycScalar coefficient(const PlanarMatching& m) const;
  CycScalar identity_coefficient() const;

  TLMorphism operator+(const TLMorphism& o) const;
  TLMorphism operator-(const TLMorphism& o) const;
  TLMorphism operator-() const;
  TLMorphism scaled(const CycScalar& s) const;
  bool operator==(const TLMorphism& o) const;
  bool operator!=(const TLMorphism& o) const { return !(*this == o); }

  // Applies fn to every coefficient (zero results are dropped).
  TLMorphism map_coefficients(const Ring& target_ring,
                              const std::function<CycScalar(const CycScalar&)>& fn) const;

  std::string to_string() const;

 private:
  void canonicalize(std::vector<Term> terms);
  void check_compatible(const TLMorphism& o) const;

  Ring ring_;
  int k_;
  int l_;
  std::vector<Term> terms_;
};

TLMorphism identity(const Ring& ring, int k);
TLMorphism cap(const Ring& ring, int k, int i);  // k -> k-2, joins bottom i, i+1
TLMorphism cup(const Ring& ring, int k, int i);  // k-2 -> k, joins top i, i+1
TLMorphism e_generator(const Ring& ring, int k, int i);  // cup(k,i) after cap(k,i)
// w nested cups inserted at position x of a W-strand level (W -> W+2w), and
// the nested caps removing positions x..x+2w-1 of a W-strand level.
TLMorphism nested_cup(const Ring& ring, int W, int x, int w);
TLMorphism nested_cap(const Ring& ring, int W, int x, int w);
TLMorphism from_matching(const Ring& ring, const PlanarMatching& m,
                         const CycScalar& coeff);

TLMorphism compose(const TLMorphism& f, const TLMorphism& g);
TLMorphism tensor(const TLMorphism& f, const TLMorphism& g);
// Id_left (x) f (x) Id_right.
TLMorphism pad(const TLMorphism& f, int left, int right);

TLMorphism partial_trace_right(const TLMorphism& f, int r);

// Coefficient list of a polynomial in the annulus core x (index = degree).
std::vector<CycScalar> annulus_closure(const TLMorphism& f);

PlanarMatching cable(const PlanarMatching& m, int c);
TLMorphism cable(const TLMorphism& f, int c);

// Left-right reflection and top-bottom reflection.
PlanarMatching mirror(const PlanarMatching& m);
PlanarMatching flip(const PlanarMatching& m);
TLMorphism mirror(const TLMorphism& f);
TLMorphism flip(const TLMorphism& f);

}  // namespace skein
