#pragma once

// Identity checks. Every check builds two morphisms and compares them
// exactly; the report keeps the nonzero terms of the difference on failure.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/tangle.hpp"

namespace skein {

enum class Outcome { Pass, Fail, Skipped };

const char* outcome_name(Outcome o);

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, long>> params;  // in insertion order
  Outcome outcome = Outcome::Pass;
  std::string reason;  // skip reason or failure note
  std::optional<TLMorphism> witness;  // LHS - RHS when the check failed
  double seconds = 0;

  bool failed() const { return outcome == Outcome::Fail; }
  std::string param_string() const;
};

// ------------------------------------------------------------------ toolkit
// Each toolkit check takes a ring, generic or at a root of unity.

// A k-cable crossing an l-cable, slid into JW_M (k + l <= M), equals
// q^{+-kl/2} JW_M. Both sides of the box and both crossing signs.
CheckReport check_crossing_absorption(const Ring& ring, int k, int l, int M);

// One strand crossing an m-cable between JW_m below and a box of size W
// above (on the cable and W - m further strands):
//   q^{+-m/2} (vertical) + q^{-+m/2} (turnback).
CheckReport check_jw_crossing(const Ring& ring, int m, int W);

// JW_a with its last strand bent up into a box that also takes the top m
// strands of JW_a equals [a-m]/[a] times JW_{a-1}, a shift diagram and
// JW_{a-m} (x) box.
CheckReport check_triangle(const Ring& ring, int a, int m);
// The same left side, expanded one recursion step further:
//   [a-m]/[a] (JW_{a-m-1} (x) 1 term) + [a-m-1]/[a] (hook term).
CheckReport check_telescoping(const Ring& ring, int a, int m);

// The diagrams used by the two checks above (exposed for tests).
TLMorphism triangle_lhs(const Ring& ring, int a, int m, const TLMorphism& box);
PlanarMatching triangle_shift(int a, int m, int box_size);

// ------------------------------------------------------------------ identities

CheckReport check_jw_axioms(const RootContext& ctx, const std::string& label);
CheckReport check_steinberg_second(const RootContext& ctx, int M);
CheckReport check_steinberg_first(const RootContext& ctx, int m, bool mirrored);
CheckReport check_ncross(const RootContext& ctx, int M);
CheckReport check_frobenius_loop(const RootContext& ctx);
// Both crossing signs of the threaded relation, plus the ncross identity at
// box size M that the proof reduces it to.
CheckReport check_frobenius_crossing(const RootContext& ctx, int M);
CheckReport check_other_steinberg(const RootContext& ctx, int k);
CheckReport check_green_trace(const RootContext& ctx, int k);

// Right side of the first Steinberg identity: JW_{2n-1} whose last n strands
// are a closed cable around m transverse strands.
TangleWord steinberg_first_word(const RootContext& ctx, int m, bool mirrored);

// Two loops around an (n-1)-strand core, held by JW_{n-1} boxes, crossing
// each other twice. `variant` 0 keeps the first crossing, 1 and 2 replace
// it by its vertical and turnback smoothings. Closed components are the
// ones to thread by T_n.
TangleWord frobenius_crossing_word(const RootContext& ctx, int variant, bool negative);

// The left side of check_ncross and the two right-side terms.
struct NcrossSides {
  TLMorphism crossed;
  TLMorphism vertical;
  TLMorphism turnback;
};
NcrossSides ncross_sides(const RootContext& ctx, int M);

// ------------------------------------------------------------------ suite

struct SuiteConfig {
  std::vector<int> roots{8};
  int m_max = 3;
  int k_max = 3;
  // "all" or a check family: jw_axioms, toolkit, steinberg_second,
  // steinberg_first, ncross, frobenius_loop, frobenius_crossing,
  // green_trace, other_steinberg.
  std::string suite = "all";
  double budget_seconds = 0;  // 0: no budget
};

const std::vector<std::string>& suite_names();

// Budget defaults to SKEIN_TIME_BUDGET_SECS when config.budget_seconds is 0.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

}  // namespace skein
