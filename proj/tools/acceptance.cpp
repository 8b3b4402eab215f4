// Acceptance run: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diagram_oracle.hpp"
#include "skein/chebyshev.hpp"
#include "skein/projectors.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

// Collects failures; keeps the first few messages.
struct Tally {
  long checks = 0;
  long failures = 0;
  long skipped = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 3) notes.push_back(what);
  }
  void report(const CheckReport& r, bool skip_ok = false) {
    if (r.outcome == Outcome::Skipped && skip_ok && !r.reason.empty()) {
      ++checks;
      ++skipped;
      return;
    }
    expect(r.outcome == Outcome::Pass, r.name + " " + r.param_string() + ": " + outcome_name(r.outcome) +
                                           (r.reason.empty() ? "" : " (" + r.reason + ")"));
  }
  void reports(const std::vector<CheckReport>& rs, bool skip_ok = false) {
    for (const auto& r : rs) report(r, skip_ok);
  }
};

SuiteConfig suite(std::vector<int> roots, const std::string& name, int m_max = 3, int k_max = 3) {
  SuiteConfig c;
  c.roots = std::move(roots);
  c.suite = name;
  c.m_max = m_max;
  c.k_max = k_max;
  c.budget_seconds = 1e9;
  return c;
}

// ------------------------------------------------------------------ 1

void scalar_relation(Tally& t) {
  for (int N = 1; N <= 24; ++N) {
    auto ctx = derive_root_context(N);
    CycScalar lhs = ctx.ring.q().pow(ctx.n);
    if ((ctx.n - 1) % 2) lhs = -lhs;
    t.expect(lhs == ctx.t, "N=" + std::to_string(N));
  }
}

// ------------------------------------------------------------------ 2

void chebyshev(Tally& t) {
  const IntPoly x = IntPoly::x_power(1);
  for (int k = 2; k <= 20; ++k)
    t.expect(chebyshev_T(k) == x * chebyshev_S(k - 1) - chebyshev_S(k - 2) * 2, "T_" + std::to_string(k));
  Ring g = Ring::generic();
  const CycScalar q = g.q(), a = q + q.inverse();
  for (int k = 0; k <= 12; ++k) {
    t.expect(evaluate_poly(chebyshev_T(k), a) == q.pow(k) + q.pow(-k), "T_" + std::to_string(k) + "(q+1/q)");
    t.expect(evaluate_poly(chebyshev_S(k), a) == quantum_integer(k + 1, g), "S_" + std::to_string(k) + "(q+1/q)");
  }
}

// ------------------------------------------------------------------ 3

void projector_properties(Tally& t, const Ring& ring, const std::vector<std::pair<int, TLMorphism>>& jws,
                          const std::string& where) {
  for (const auto& [k, p] : jws) {
    const std::string tag = where + " JW_" + std::to_string(k);
    t.expect(verify_jw_axioms(p).passed(), tag + " axioms");
    if (k <= 8) t.expect(compose(p, p) == p, tag + " idempotence");
    for (const auto& [j, small] : jws) {
      if (j >= k || j < 2) continue;
      t.expect(compose(pad(small, 0, k - j), p) == p, tag + " absorbs JW_" + std::to_string(j) + " below");
      t.expect(compose(p, pad(small, k - j, 0)) == p, tag + " absorbs JW_" + std::to_string(j) + " above");
    }
  }
  for (const auto& [m1, p] : jws)
    for (const auto& [m, below] : jws) {
      if (m != m1 - 1) continue;
      // Closing the last strand of JW_a gives -[a+1]/[a] JW_{a-1}.
      CycScalar ratio = -(quantum_integer(m1 + 1, ring) / quantum_integer(m1, ring));
      t.expect(partial_trace_right(p, 1) == below.scaled(ratio), where + " trace of JW_" + std::to_string(m1));
    }
}

void jw_toolkit(Tally& t) {
  Ring g = Ring::generic();
  std::vector<std::pair<int, TLMorphism>> generic;
  for (int k = 0; k <= 6; ++k) generic.emplace_back(k, jones_wenzl(k, g));
  projector_properties(t, g, generic, "generic");
  for (int N : {8, 12}) {
    auto ctx = derive_root_context(N);
    std::vector<std::pair<int, TLMorphism>> jws;
    for (int k = 0; k <= 3 * ctx.n - 1; ++k) {
      try {
        jws.emplace_back(k, jw_dispatch(k, ctx.ring));
      } catch (const SkeinError& e) {
        if (e.code() != ErrorCode::BoxNotConstructible) throw;
      }
    }
    projector_properties(t, ctx.ring, jws, "N=" + std::to_string(N));
  }
  for (int a = 1; a <= 6; ++a)
    for (int m = 0; m <= a; ++m) {
      t.report(check_triangle(g, a, m));
      if (a >= 2 && m <= a - 1) t.report(check_telescoping(g, a, m));
    }
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      for (int M = k + l; M <= 6; ++M) t.report(check_crossing_absorption(g, k, l, M));
  for (int m = 1; m <= 4; ++m) t.report(check_jw_crossing(g, m, m + 1));
  t.reports(run_suite(suite({8, 12}, "toolkit")));
}

// ------------------------------------------------------------------ 4..8

void jw_2n_minus_1_axioms(Tally& t) {
  for (int N : {8, 12, 20}) t.report(check_jw_axioms(derive_root_context(N), "jw2n1"));
}

void steinberg(Tally& t) {
  for (int N : {8, 12}) {
    auto ctx = derive_root_context(N);
    t.report(check_steinberg_second(ctx, 2 * ctx.n - 1));
    for (int m = 0; m <= 3; ++m)
      for (bool mirrored : {false, true}) t.report(check_steinberg_first(ctx, m, mirrored));
  }
}

void ncross(Tally& t) {
  t.report(check_ncross(derive_root_context(8), 3));
  t.report(check_ncross(derive_root_context(12), 5));
}

void frobenius(Tally& t) {
  for (int N = 1; N <= 24; ++N) t.report(check_frobenius_loop(derive_root_context(N)));
  for (int N : {8, 12}) {
    auto ctx = derive_root_context(N);
    t.report(check_frobenius_crossing(ctx, 2 * ctx.n - 1));
  }
}

void thick(Tally& t) {
  // n = 2 needs N = 8; n = 3 arises at N = 3, 6 and 12.
  for (int N : {8, 3, 6, 12}) {
    auto ctx = derive_root_context(N);
    for (int k = 1; k <= 3; ++k) t.report(check_jw_axioms(ctx, "jwhat" + std::to_string(k)), true);
    for (int k = 2; k <= 3; ++k) t.report(check_green_trace(ctx, k), true);
    for (int k = 1; k <= 3; ++k) t.report(check_other_steinberg(ctx, k), true);
  }
}

// ------------------------------------------------------------------ 9

long catalan(int k) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Counts noncrossing perfect matchings of 2k points on a circle by trying
// every perfect matching and testing all chord pairs for interleaving.
long brute_force_noncrossing(int k) {
  std::vector<int> mate(2 * k, -1);
  long count = 0;
  std::function<void()> rec = [&] {
    int i = 0;
    while (i < 2 * k && mate[i] >= 0) ++i;
    if (i == 2 * k) {
      for (int a = 0; a < 2 * k; ++a)
        for (int b = 0; b < 2 * k; ++b) {
          int c = mate[a], d = mate[b];
          if (a < c && b < d && a < b && b < c && c < d) return;
        }
      ++count;
      return;
    }
    for (int j = i + 1; j < 2 * k; ++j)
      if (mate[j] < 0) {
        mate[i] = j;
        mate[j] = i;
        rec();
        mate[i] = mate[j] = -1;
      }
  };
  rec();
  return count;
}

void oracle_equivalence(Tally& t) {
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> size(0, 7);
  Ring g = Ring::generic();
  for (int trial = 0; trial < 500; ++trial) {
    int k = size(rng), l = size(rng), m = size(rng);
    if ((k + l) % 2) ++l;
    if ((l + m) % 2) ++m;
    auto lower = oracle::random_matching(k, l, rng);
    auto upper = oracle::random_matching(l, m, rng);
    oracle::Glued expected = oracle::glue(lower, upper);
    GlueResult got = glue(lower, upper);
    std::vector<int> pairing(got.matching.pairing().begin(), got.matching.pairing().end());
    const std::string tag = lower.to_string() + " ; " + upper.to_string();
    t.expect(pairing == expected.pairing && got.loops == expected.loops, tag);
    TLMorphism c = compose(from_matching(g, lower, g.one()), from_matching(g, upper, g.one()));
    t.expect(c.size() == 1 && c.terms()[0].first == got.matching &&
                 c.terms()[0].second == g.delta().pow(expected.loops),
             tag + " (morphism)");
  }
  for (int k = 0; k <= 8; ++k) {
    const long expected = catalan(k);
    t.expect(brute_force_noncrossing(k) == expected, "brute force C_" + std::to_string(k));
    for (int a = 0; a <= 2 * k; ++a) {
      auto all = enumerate_matchings(a, 2 * k - a);
      bool valid = true;
      for (size_t i = 0; i < all.size(); ++i) {
        valid = valid && is_noncrossing(a, 2 * k - a, all[i].pairing());
        if (i) valid = valid && all[i - 1] < all[i];
      }
      t.expect(static_cast<long>(all.size()) == expected && valid,
               "enumerate_matchings(" + std::to_string(a) + "," + std::to_string(2 * k - a) + ")");
    }
  }
}

// ------------------------------------------------------------------ 10

void sensitivity(Tally& t) {
  auto ctx = derive_root_context(8);
  SuiteConfig c = suite({8}, "all", 1, 2);
  clear_projector_cache();
  TLMorphism jw = jw_2n_minus_1(ctx);
  bool clean = true;
  for (const auto& r : run_suite(c)) clean = clean && !r.failed();
  t.expect(clean, "unperturbed suite fails");
  for (const auto& m : enumerate_matchings(3, 3))
    for (int unit : {1, -1}) {
      clear_projector_cache();
      install_projector(8, "jw2n1", jw + from_matching(ctx.ring, m, ctx.ring.integer(unit)));
      bool caught = false;
      for (const auto& r : run_suite(c)) caught = caught || r.failed();
      t.expect(caught, "perturbation " + std::to_string(unit) + " at " + m.to_string() + " not caught");
    }
  clear_projector_cache();
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "scalar relation (-1)^(n-1) q^n = t, N <= 24", 1, scalar_relation},
      {2, "Chebyshev recursion and evaluations", 1, chebyshev},
      {3, "JW toolkit", 30, jw_toolkit},
      {4, "JW_{2n-1} axioms at N = 8, 12, 20", 120, jw_2n_minus_1_axioms},
      {5, "Steinberg identities at N = 8, 12", 300, steinberg},
      {6, "ncross at (n, M) = (2, 3), (3, 5)", 600, ncross},
      {7, "Chebyshev-Frobenius relations", 600, frobenius},
      {8, "thick projectors: axioms, green trace, second Steinberg", 600, thick},
      {9, "gluing oracle and Catalan counts", 30, oracle_equivalence},
      {10, "sensitivity to unit perturbations of JW_3 at N = 8", 60, sensitivity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = secs > c.limit_seconds;
    const bool ok = error.empty() && t.failures == 0 && !slow;
    failed += !ok;
    char line[256];
    std::snprintf(line, sizeof line, "criterion %2d: %s  %-58s %6.2fs  %ld checks", c.id, ok ? "PASS" : "FAIL",
                  c.title, secs, t.checks);
    std::cout << line;
    if (t.skipped) std::cout << ", " << t.skipped << " skipped";
    if (t.failures) std::cout << ", " << t.failures << " failed";
    std::cout << "\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    if (slow) std::cout << "    over the " << c.limit_seconds << "s limit\n";
    for (const auto& n : t.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria" : std::string("all criteria pass"))
            << "\n";
  return failed ? 1 : 0;
}
