#include "skein/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "skein/chebyshev.hpp"
#include "skein/projectors.hpp"

namespace skein {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
  }
  return "?";
}

std::string CheckReport::param_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < params.size(); ++i)
    os << (i ? " " : "") << params[i].first << "=" << params[i].second;
  return os.str();
}

namespace {

using Params = std::vector<std::pair<std::string, long>>;

// Collects comparisons; the first failing one is kept as the witness.
struct Comparison {
  CheckReport& report;

  void expect(const TLMorphism& lhs, const TLMorphism& rhs, const std::string& what) {
    if (lhs == rhs) return;
    if (report.outcome != Outcome::Fail) {
      report.outcome = Outcome::Fail;
      report.reason = what;
      report.witness = lhs - rhs;
    }
  }
  void expect_zero(const TLMorphism& f, const std::string& what) {
    expect(f, TLMorphism(f.ring(), f.source(), f.target()), what);
  }
};

Params with_root(const Ring& ring, Params p) {
  p.insert(p.begin(), {"N", ring.N()});
  return p;
}

Params with_ctx(const RootContext& ctx, Params p) {
  p.insert(p.begin(), {"n", ctx.n});
  p.insert(p.begin(), {"N", ctx.N});
  return p;
}

// Runs body, turning construction errors into skips and timing the check.
CheckReport run_check(std::string name, Params params,
                      const std::function<void(Comparison&)>& body) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  auto start = std::chrono::steady_clock::now();
  Comparison cmp{r};
  try {
    body(cmp);
  } catch (const SkeinError& e) {
    r.witness.reset();
    if (e.code() == ErrorCode::BoxNotConstructible ||
        e.code() == ErrorCode::ThickJWNotDefined ||
        e.code() == ErrorCode::QuantumIntegerVanishes) {
      r.outcome = Outcome::Skipped;
      r.reason = std::string(error_code_name(e.code())) + ": " + e.what();
    } else {
      r.outcome = Outcome::Fail;
      r.reason = std::string(error_code_name(e.code())) + ": " + e.what();
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Matching from explicit point pairs (points numbered as in PlanarMatching).
PlanarMatching matching(int k, int l, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<uint16_t> p(k + l);
  for (auto [a, b] : pairs) {
    p[a] = static_cast<uint16_t>(b);
    p[b] = static_cast<uint16_t>(a);
  }
  return PlanarMatching(k, l, std::move(p));
}

TLMorphism basis(const Ring& ring, const PlanarMatching& m) {
  return from_matching(ring, m, ring.one());
}

// Smallest box size >= need that a JW projector exists for.
int box_size(const Ring& ring, int need) {
  if (!ring.is_root()) return need;
  const int n = derive_root_context(ring.N()).n;
  if (n == 1 || need <= n - 1) return need;
  if (need <= 2 * n - 1) return 2 * n - 1;
  for (int k = 2;; ++k)
    if (need <= n - 1 + k * n) return n - 1 + k * n;
}

CycScalar ratio(const Ring& ring, int top, int bottom) {
  return quantum_integer(top, ring) / quantum_integer(bottom, ring);
}

TLMorphism threaded_closed(const TangleWord& word, int n, const Ring& ring) {
  std::vector<std::pair<int, IntPoly>> threads;
  for (const auto& c : word.components())
    if (c.closed) threads.emplace_back(c.id, chebyshev_T(n));
  return thread(word, threads, ring);
}

}  // namespace

// ------------------------------------------------------------------ toolkit

CheckReport check_crossing_absorption(const Ring& ring, int k, int l, int M) {
  return run_check("crossing_absorption", with_root(ring, {{"k", k}, {"l", l}, {"M", M}}),
                   [&](Comparison& cmp) {
    if (k + l > M) throw SkeinError(ErrorCode::InvalidArgument, "cables wider than the box");
    TLMorphism box = jw_dispatch(M, ring);
    for (bool over : {true, false}) {
      CycScalar factor = ring.v_power((over ? 1 : -1) * k * l);
      TLMorphism expected = box.scaled(factor);
      TLMorphism block = crossing_block(ring, k, l, over);
      std::string sign = over ? "over" : "under";
      for (int left : {0, M - k - l}) {
        TLMorphism x = pad(block, left, M - k - l - left);
        cmp.expect(compose(x, box), expected, sign + " crossing below the box, offset " + std::to_string(left));
        cmp.expect(compose(box, x), expected, sign + " crossing above the box, offset " + std::to_string(left));
      }
    }
  });
}

CheckReport check_jw_crossing(const Ring& ring, int m, int W) {
  return run_check("jw_crossing", with_root(ring, {{"m", m}, {"W", W}}), [&](Comparison& cmp) {
    if (m < 1 || W < m) throw SkeinError(ErrorCode::InvalidArgument, "need 1 <= m <= W");
    const int width = W + 1;
    TLMorphism lower = pad(jones_wenzl(m, ring), 0, width - m);
    TLMorphism upper = pad(jw_dispatch(W, ring), 1, 0);
    // Turnback: the strand's lower half cups onto the cable's last strand,
    // its upper half caps off against the box's first strand.
    std::vector<std::pair<int, int>> pairs{{m - 1, m}, {width, width + 1}};
    for (int i = 0; i + 2 <= m; ++i) pairs.emplace_back(i, width + i + 2);
    for (int i = m + 1; i < width; ++i) pairs.emplace_back(i, width + i);
    TLMorphism turn = basis(ring, matching(width, width, pairs));
    TLMorphism vertical = compose(lower, upper);
    TLMorphism turnback = compose(compose(lower, turn), upper);
    for (bool over : {true, false}) {
      const int s = over ? 1 : -1;
      TLMorphism crossed = compose(compose(lower, pad(crossing_block(ring, m, 1, over), 0, W - m)), upper);
      cmp.expect(crossed,
                 vertical.scaled(ring.v_power(s * m)) + turnback.scaled(ring.v_power(-s * m)),
                 over ? "strand under the cable" : "strand over the cable");
    }
  });
}

TLMorphism triangle_lhs(const Ring& ring, int a, int m, const TLMorphism& box) {
  const int extra = box.source() - m - 1;
  TLMorphism bent = nested_cup(ring, a - 1 + extra, a - 1, 1);
  return compose(compose(bent, pad(jones_wenzl(a, ring), 0, 1 + extra)), pad(box, a - m, 0));
}

PlanarMatching triangle_shift(int a, int m, int box_size) {
  const int extra = box_size - m - 1;
  const int c = a - m;
  const int k = a - 1 + extra;
  std::vector<std::pair<int, int>> pairs{{k + c - 1, k + c}};
  for (int i = 0; i < c - 1; ++i) pairs.emplace_back(i, k + i);
  for (int i = c - 1; i <= a - 2; ++i) pairs.emplace_back(i, k + i + 2);
  for (int e = 0; e < extra; ++e) pairs.emplace_back(a - 1 + e, k + a + 1 + e);
  return matching(k, a + 1 + extra, pairs);
}

namespace {

// JW_{a-1} ; shift ; (top (x) box).
TLMorphism triangle_rhs(const Ring& ring, int a, int m, const TLMorphism& box, const TLMorphism& top) {
  const int extra = box.source() - m - 1;
  TLMorphism low = pad(jones_wenzl(a - 1, ring), 0, extra);
  return compose(compose(low, basis(ring, triangle_shift(a, m, box.source()))), tensor(top, box));
}

}  // namespace

CheckReport check_triangle(const Ring& ring, int a, int m) {
  return run_check("triangle", with_root(ring, {{"a", a}, {"m", m}}), [&](Comparison& cmp) {
    if (a < 1 || m < 0 || m > a) throw SkeinError(ErrorCode::InvalidArgument, "need 0 <= m <= a, a >= 1");
    TLMorphism box = jw_dispatch(box_size(ring, m + 1), ring);
    TLMorphism lhs = triangle_lhs(ring, a, m, box);
    if (m == a) {
      cmp.expect_zero(lhs, "coefficient [0] forces zero");
      return;
    }
    TLMorphism rhs = triangle_rhs(ring, a, m, box, jones_wenzl(a - m, ring));
    cmp.expect(lhs, rhs.scaled(ratio(ring, a - m, a)), "triangle");
  });
}

CheckReport check_telescoping(const Ring& ring, int a, int m) {
  return run_check("telescoping", with_root(ring, {{"a", a}, {"m", m}}), [&](Comparison& cmp) {
    if (a < 2 || m < 0 || m > a - 1) throw SkeinError(ErrorCode::InvalidArgument, "need 0 <= m <= a-1");
    const int c = a - m;
    TLMorphism box = jw_dispatch(box_size(ring, m + 1), ring);
    TLMorphism lhs = triangle_lhs(ring, a, m, box);
    TLMorphism straight = pad(jones_wenzl(c - 1, ring), 0, 1);
    TLMorphism rhs = triangle_rhs(ring, a, m, box, straight).scaled(ratio(ring, c, a));
    if (c >= 2) {
      TLMorphism hook = compose(compose(straight, e_generator(ring, c, c - 2)), straight);
      rhs = rhs + triangle_rhs(ring, a, m, box, hook).scaled(ratio(ring, c - 1, a));
    }
    cmp.expect(lhs, rhs, "telescoping");
  });
}

// ------------------------------------------------------------------ identities

CheckReport check_jw_axioms(const RootContext& ctx, const std::string& label) {
  return run_check("jw_axioms:" + label, with_ctx(ctx, {}), [&](Comparison& cmp) {
    TLMorphism p(ctx.ring, 0, 0);
    if (label == "jw2n1") {
      p = jw_2n_minus_1(ctx);
    } else if (label.rfind("jwhat", 0) == 0) {
      p = jw_hat(std::stoi(label.substr(5)), ctx);
    } else if (label.rfind("jw", 0) == 0) {
      p = jones_wenzl(std::stoi(label.substr(2)), ctx.ring);
    } else {
      throw SkeinError(ErrorCode::InvalidArgument, "unknown projector label " + label);
    }
    const int k = p.source();
    const Ring& ring = ctx.ring;
    cmp.expect(identity(ring, k).scaled(p.identity_coefficient()), identity(ring, k),
               "identity coefficient");
    for (int i = 0; i + 1 < k; ++i) {
      cmp.expect_zero(compose(cup(ring, k, i), p), "cap below at " + std::to_string(i));
      cmp.expect_zero(compose(p, cap(ring, k, i)), "cap above at " + std::to_string(i));
    }
    // Idempotence follows from the axioms; spot-check it where it is cheap.
    if (k <= 8) cmp.expect(compose(p, p), p, "idempotence");
  });
}

CheckReport check_steinberg_second(const RootContext& ctx, int M) {
  return run_check("steinberg_second", with_ctx(ctx, {{"M", M}}), [&](Comparison& cmp) {
    const int n = ctx.n;
    if (M < n) throw SkeinError(ErrorCode::InvalidArgument, "M must be at least n");
    const Ring& ring = ctx.ring;
    TLMorphism box = jw_dispatch(M, ring);
    TLMorphism lhs = tensor(jones_wenzl(n - 1, ring), box);
    TLMorphism outer = pad(box, n - 1, 0);
    TLMorphism rhs = compose(compose(outer, pad(jw_2n_minus_1(ctx), 0, M - n)), outer);
    cmp.expect(lhs, rhs, "JW_{n-1} (x) JW_M");
  });
}

TangleWord steinberg_first_word(const RootContext& ctx, int m, bool mirrored) {
  const int n = ctx.n;
  TangleWord w(n - 1 + m);
  w.cup(n - 1 + m, n);
  // Lower arc: the transverse strands pass over the cable (under when mirrored).
  for (int j = n - 2 + m; j >= n - 1; --j) mirrored ? w.under(j) : w.over(j);
  w.box(0, n, jw_2n_minus_1(ctx), "jw2n1");
  for (int p = n - 1; p < n - 1 + m; ++p) mirrored ? w.under(p) : w.over(p);
  w.cap(n - 1 + m);
  return w;
}

CheckReport check_steinberg_first(const RootContext& ctx, int m, bool mirrored) {
  return run_check("steinberg_first", with_ctx(ctx, {{"m", m}, {"mirrored", mirrored}}),
                   [&](Comparison& cmp) {
    const Ring& ring = ctx.ring;
    TLMorphism lhs = tensor(jones_wenzl(ctx.n - 1, ring), encircle(m, chebyshev_T(ctx.n), ring, mirrored));
    TLMorphism rhs = resolve(steinberg_first_word(ctx, m, mirrored), ring);
    cmp.expect(lhs, rhs, "threaded loop vs closed JW_{2n-1}");
  });
}

NcrossSides ncross_sides(const RootContext& ctx, int M) {
  const int n = ctx.n;
  const Ring& ring = ctx.ring;
  if (M < n) throw SkeinError(ErrorCode::InvalidArgument, "M must be at least n");
  TLMorphism single = jw_dispatch(M, ring);
  TLMorphism boxes = tensor(single, single);
  auto sandwich = [&](const TLMorphism& middle) {
    return compose(compose(boxes, pad(middle, M - n, M - n)), boxes);
  };
  TLMorphism turn = compose(nested_cap(ring, 2 * n, 0, n), nested_cup(ring, 0, 0, n));
  return {sandwich(crossing_block(ring, n, n, true)), boxes, sandwich(turn)};
}

CheckReport check_ncross(const RootContext& ctx, int M) {
  return run_check("ncross", with_ctx(ctx, {{"M", M}}), [&](Comparison& cmp) {
    NcrossSides s = ncross_sides(ctx, M);
    cmp.expect(s.crossed, s.vertical.scaled(ctx.t_half) + s.turnback.scaled(ctx.t_half.inverse()),
               "crossed n-cables");
  });
}

CheckReport check_frobenius_loop(const RootContext& ctx) {
  return run_check("frobenius_loop", with_ctx(ctx, {}), [&](Comparison& cmp) {
    const Ring& ring = ctx.ring;
    TangleWord w(0);
    w.cup(0).cap(0);
    TLMorphism lhs = thread(w, w.component_of_cup(0), chebyshev_T(ctx.n), ring);
    TLMorphism rhs = identity(ring, 0).scaled(-(ctx.t + ctx.t.inverse()));
    cmp.expect(lhs, rhs, "T_n-threaded unknot");
  });
}

TangleWord frobenius_crossing_word(const RootContext& ctx, int variant, bool negative) {
  const int c = ctx.n - 1;  // core strands
  TangleWord w(c);
  auto cross = [&](int p) { negative ? w.under(p) : w.over(p); };
  if (c > 0) w.box(0, c, jones_wenzl(c, ctx.ring), "core");
  // First loop: lower arc behind the core.
  w.cup(c);
  for (int j = c - 1; j >= 0; --j) w.over(j);
  // Second loop, inside the first on the right.
  w.cup(c + 1);
  for (int j = c; j >= 1; --j) w.over(j);
  // First loop's upper arc crosses the second loop twice.
  if (variant == 0) {
    cross(0);
  } else if (variant == 2) {
    w.cap(0).cup(0);
  }
  for (int p = 1; p <= c; ++p) w.over(p);
  cross(c + 1);
  w.cap(c + 2);
  for (int p = 0; p < c; ++p) w.over(p);
  w.cap(c);
  if (c > 0) w.box(0, c, jones_wenzl(c, ctx.ring), "core");
  return w;
}

CheckReport check_frobenius_crossing(const RootContext& ctx, int M) {
  return run_check("frobenius_crossing", with_ctx(ctx, {{"M", M}}), [&](Comparison& cmp) {
    const Ring& ring = ctx.ring;
    const CycScalar& th = ctx.t_half;
    for (bool negative : {false, true}) {
      TLMorphism crossed = threaded_closed(frobenius_crossing_word(ctx, 0, negative), ctx.n, ring);
      TLMorphism vertical = threaded_closed(frobenius_crossing_word(ctx, 1, negative), ctx.n, ring);
      TLMorphism turnback = threaded_closed(frobenius_crossing_word(ctx, 2, negative), ctx.n, ring);
      CycScalar a = negative ? th.inverse() : th;
      cmp.expect(crossed, vertical.scaled(a) + turnback.scaled(a.inverse()),
                 negative ? "negative crossing of threaded loops" : "positive crossing of threaded loops");
    }
    // The proof reduces the relation to ncross between boxes; its defect must vanish.
    NcrossSides s = ncross_sides(ctx, M);
    cmp.expect_zero(s.crossed - s.vertical.scaled(th) - s.turnback.scaled(th.inverse()), "ncross defect");
  });
}

CheckReport check_other_steinberg(const RootContext& ctx, int k) {
  return run_check("other_steinberg", with_ctx(ctx, {{"k", k}}), [&](Comparison& cmp) {
    const int n = ctx.n;
    const Ring& ring = ctx.ring;
    if (k < 1) throw SkeinError(ErrorCode::InvalidArgument, "k must be >= 1");
    TLMorphism lhs = tensor(jones_wenzl(n - 1, ring), thick_jw(k, ctx));
    TLMorphism hat = jw_hat(k, ctx);
    // Each green cable ends in a JW_{2n-1} shared with the n-1 strands to its
    // left; the same boxes close both sides.
    TLMorphism jw2n1 = jw_2n_minus_1(ctx);
    auto close = [&](TLMorphism f) {
      for (int i = 0; i < k; ++i) {
        f = compose(pad(jw2n1, i * n, (k - 1 - i) * n), f);
        f = compose(f, pad(jw2n1, i * n, (k - 1 - i) * n));
      }
      return f;
    };
    cmp.expect(close(lhs), close(hat), "closed in JW_{2n-1} boxes");
    cmp.expect(compose(hat, lhs), hat, "absorbed below the projector");
    cmp.expect(compose(lhs, hat), hat, "absorbed above the projector");
  });
}

CheckReport check_green_trace(const RootContext& ctx, int k) {
  return run_check("green_trace", with_ctx(ctx, {{"k", k}}), [&](Comparison& cmp) {
    if (k < 2) throw SkeinError(ErrorCode::InvalidArgument, "k must be >= 2");
    const Ring& ring = ctx.ring;
    mpq_class below = thick_quantum_integer(k - 1, ctx);
    if (below == 0) throw SkeinError(ErrorCode::ThickJWNotDefined, "[k-1]_t vanishes");
    mpq_class factor = -thick_quantum_integer(k, ctx) / below;
    TLMorphism closed = partial_trace_right(jw_hat(k - 1, ctx), ctx.n);
    cmp.expect(closed, jw_hat(k - 2, ctx).scaled(ring.rational(factor)), "closed green cable");
  });
}

// ------------------------------------------------------------------ suite

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "jw_axioms", "toolkit",            "steinberg_second", "steinberg_first", "ncross",
      "frobenius_loop", "frobenius_crossing", "green_trace",  "other_steinberg"};
  return names;
}

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
  double budget = config.budget_seconds;
  if (const char* env = std::getenv("SKEIN_TIME_BUDGET_SECS")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) budget = v;
  }
  bool known = config.suite == "all";
  for (const auto& s : suite_names()) known = known || s == config.suite;
  if (!known) throw SkeinError(ErrorCode::InvalidArgument, "unknown suite '" + config.suite + "'");

  auto start = std::chrono::steady_clock::now();
  std::vector<CheckReport> out;
  auto wanted = [&](const std::string& family) {
    return config.suite == "all" || config.suite == family;
  };
  auto add = [&](const std::function<CheckReport()>& check, const std::string& name, Params params) {
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget > 0 && elapsed > budget) {
      CheckReport r;
      r.name = name;
      r.params = std::move(params);
      r.outcome = Outcome::Skipped;
      r.reason = "time budget exhausted";
      out.push_back(std::move(r));
      return;
    }
    out.push_back(check());
  };

  for (int N : config.roots) {
    RootContext ctx = derive_root_context(N);
    const int n = ctx.n;
    const Ring& ring = ctx.ring;
    Params base{{"N", N}, {"n", n}};
    auto p = [&](Params extra) {
      Params all = base;
      all.insert(all.end(), extra.begin(), extra.end());
      return all;
    };

    if (wanted("jw_axioms")) {
      std::vector<std::string> labels;
      for (int k = 2; k <= n - 1; ++k) labels.push_back("jw" + std::to_string(k));
      if (n > 1) labels.push_back("jw2n1");
      for (int k = 2; k <= config.k_max && n > 1; ++k) labels.push_back("jwhat" + std::to_string(k));
      for (const auto& l : labels)
        add([&] { return check_jw_axioms(ctx, l); }, "jw_axioms:" + l, base);
    }
    if (wanted("toolkit")) {
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          int M = box_size(ring, k + l);
          if (n > 1 && M > 2 * n - 1) continue;
          add([&] { return check_crossing_absorption(ring, k, l, M); }, "crossing_absorption",
              {{"N", N}, {"k", k}, {"l", l}, {"M", M}});
        }
      for (int m = 1; m <= n - 1; ++m)
        add([&] { return check_jw_crossing(ring, m, 2 * n - 1); }, "jw_crossing",
            {{"N", N}, {"m", m}, {"W", 2 * n - 1}});
      if (n >= 2) {
        for (int m = 0; m <= n - 1; ++m)
          add([&] { return check_triangle(ring, n - 1, m); }, "triangle", {{"N", N}, {"a", n - 1}, {"m", m}});
        for (int m = 0; m <= n - 2 && n >= 3; ++m)
          add([&] { return check_telescoping(ring, n - 1, m); }, "telescoping",
              {{"N", N}, {"a", n - 1}, {"m", m}});
      }
    }
    if (wanted("steinberg_second"))
      add([&] { return check_steinberg_second(ctx, 2 * n - 1); }, "steinberg_second", p({{"M", 2 * n - 1}}));
    if (wanted("steinberg_first"))
      for (int m = 0; m <= config.m_max; ++m)
        for (bool mirrored : {false, true})
          add([&] { return check_steinberg_first(ctx, m, mirrored); }, "steinberg_first",
              p({{"m", m}, {"mirrored", mirrored}}));
    if (wanted("ncross"))
      add([&] { return check_ncross(ctx, 2 * n - 1); }, "ncross", p({{"M", 2 * n - 1}}));
    if (wanted("frobenius_loop"))
      add([&] { return check_frobenius_loop(ctx); }, "frobenius_loop", base);
    if (wanted("frobenius_crossing"))
      add([&] { return check_frobenius_crossing(ctx, 2 * n - 1); }, "frobenius_crossing", p({{"M", 2 * n - 1}}));
    if (wanted("green_trace"))
      for (int k = 2; k <= config.k_max; ++k)
        add([&] { return check_green_trace(ctx, k); }, "green_trace", p({{"k", k}}));
    if (wanted("other_steinberg"))
      for (int k = 1; k <= config.k_max; ++k)
        add([&] { return check_other_steinberg(ctx, k); }, "other_steinberg", p({{"k", k}}));
  }
  return out;
}

}  // namespace skein
