#pragma once

// Jones-Wenzl projectors and their root-of-unity relatives.
//
//   jones_wenzl(k)   recursion JW_k = JW_{k-1}(x)1 + [k-1]/[k] (JW_{k-1}(x)1) e_{k-1} (JW_{k-1}(x)1)
//   jw_2n_minus_1    A_0 + sum_k (-1)^k (A_k + A_k'), built from JW_{n-1}
//   thick_jw(k)      JW_k at parameter t with every strand replaced by n parallel strands
//   jw_hat(k)        projector on n-1+kn strands assembled from the above
//
// Results are memoized per (N, label); the cache is safe for concurrent use.

#include <string>
#include <vector>

#include "skein/diagram.hpp"

namespace skein {

TLMorphism jones_wenzl(int k, const Ring& ring);
TLMorphism jw_2n_minus_1(const RootContext& ctx);
TLMorphism thick_jw(int k, const RootContext& ctx);
TLMorphism jw_hat(int k, const RootContext& ctx);

// The summands of jw_2n_minus_1: A_0 and, for 1 <= k <= n-1, A_k and its mirror.
TLMorphism jw_2n_minus_1_term(int k, bool mirrored, const RootContext& ctx);

// Quantum integer [j] at q = t (t = +-1).
mpq_class thick_quantum_integer(int j, const RootContext& ctx);

// Any JW-type projector on k strands that the constructions above provide:
// the recursion when every [j] != 0, JW_{2n-1}, or JW_{n-1+jn}. Throws
// BoxNotConstructible naming the vanishing quantum integer otherwise.
TLMorphism jw_dispatch(int k, const Ring& ring);

struct AxiomReport {
  bool identity_coefficient_is_one = false;
  bool uncappable = false;
  // Failing cap positions as (side, index), side 0 = bottom, 1 = top.
  std::vector<std::pair<int, int>> cappable_at;
  bool passed() const { return identity_coefficient_is_one && uncappable; }
  std::string summary() const;
};

AxiomReport verify_jw_axioms(const TLMorphism& f);

void clear_projector_cache();

// Replaces a cached projector (labels: "jw<k>", "jw2n1", "tjw<k>", "jwhat<k>").
// Used to inject faults; clear_projector_cache() restores the constructions.
void install_projector(int N, const std::string& label, TLMorphism f);

}  // namespace skein
