#include <gtest/gtest.h>

#include "skein/chebyshev.hpp"
#include "skein/projectors.hpp"

using namespace skein;

namespace {

long catalan(int k) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Closes every strand on the right.
CycScalar full_trace(const TLMorphism& f) {
  return partial_trace_right(f, f.source()).identity_coefficient();
}

TLMorphism padded_to(const TLMorphism& f, int k) { return pad(f, 0, k - f.source()); }

}  // namespace

TEST(JonesWenzl, SmallCasesMatchClosedForms) {
  Ring g = Ring::generic();
  auto q2 = quantum_integer(2, g), q3 = quantum_integer(3, g);
  TLMorphism jw2 = identity(g, 2) + e_generator(g, 2, 0).scaled(q2.inverse());
  EXPECT_EQ(jones_wenzl(2, g), jw2);

  TLMorphism e1 = e_generator(g, 3, 0), e2 = e_generator(g, 3, 1);
  TLMorphism jw3 = identity(g, 3) + (e1 + e2).scaled(q2 / q3) +
                   (compose(e1, e2) + compose(e2, e1)).scaled(q3.inverse());
  EXPECT_EQ(jones_wenzl(3, g), jw3);
}

TEST(JonesWenzl, GenericAxiomsIdempotenceAbsorption) {
  Ring g = Ring::generic();
  for (int k = 0; k <= 6; ++k) {
    TLMorphism p = jones_wenzl(k, g);
    EXPECT_EQ(p.size(), static_cast<size_t>(catalan(k))) << k;
    EXPECT_TRUE(verify_jw_axioms(p).passed()) << k;
    EXPECT_EQ(compose(p, p), p) << k;
    for (int j = 0; j <= k; ++j) {
      TLMorphism small = padded_to(jones_wenzl(j, g), k);
      EXPECT_EQ(compose(small, p), p) << k << " " << j;
      EXPECT_EQ(compose(p, small), p) << k << " " << j;
      EXPECT_EQ(compose(pad(jones_wenzl(j, g), k - j, 0), p), p) << k << " " << j;
    }
  }
}

TEST(JonesWenzl, TraceRatio) {
  Ring g = Ring::generic();
  for (int k = 1; k <= 6; ++k) {
    TLMorphism p = jones_wenzl(k, g);
    TLMorphism closed = partial_trace_right(p, 1);
    auto ratio = -(quantum_integer(k + 1, g) / quantum_integer(k, g));
    EXPECT_EQ(closed, jones_wenzl(k - 1, g).scaled(ratio)) << k;
    auto expected = quantum_integer(k + 1, g);
    if (k % 2) expected = -expected;
    EXPECT_EQ(full_trace(p), expected) << k;
  }
}

TEST(JonesWenzl, RootModeWhileQuantumIntegersSurvive) {
  for (int N : {8, 12, 20, 24}) {
    auto ctx = derive_root_context(N);
    for (int k = 0; k < ctx.n; ++k) {
      TLMorphism p = jones_wenzl(k, ctx.ring);
      EXPECT_TRUE(verify_jw_axioms(p).passed()) << N << " " << k;
      EXPECT_EQ(compose(p, p), p) << N << " " << k;
    }
    EXPECT_THROW(
        {
          try {
            jones_wenzl(ctx.n, ctx.ring);
          } catch (const SkeinError& e) {
            EXPECT_EQ(e.code(), ErrorCode::QuantumIntegerVanishes);
            throw;
          }
        },
        SkeinError);
  }
}

TEST(JwTwoNMinusOne, AxiomsAndIdempotence) {
  for (int N : {8, 12, 20}) {
    auto ctx = derive_root_context(N);
    TLMorphism p = jw_2n_minus_1(ctx);
    EXPECT_EQ(p.source(), 2 * ctx.n - 1);
    AxiomReport r = verify_jw_axioms(p);
    EXPECT_TRUE(r.passed()) << N << ": " << r.summary();
    if (N != 20) EXPECT_EQ(compose(p, p), p) << N;
  }
}

TEST(JwTwoNMinusOne, AgreesWithGenericProjectorAtTheRoot) {
  // The generic JW_{2n-1} has no pole at v = zeta_N even though [n] vanishes.
  for (int N : {8, 12}) {
    auto ctx = derive_root_context(N);
    TLMorphism generic = jones_wenzl(2 * ctx.n - 1, Ring::generic());
    TLMorphism at_root = generic.map_coefficients(
        ctx.ring, [&](const CycScalar& c) { return c.evaluate_at(ctx.v); });
    EXPECT_EQ(at_root, jw_2n_minus_1(ctx)) << N;
  }
}

TEST(JwTwoNMinusOne, TermsAreMirrorPairs) {
  auto ctx = derive_root_context(12);
  for (int k = 1; k < ctx.n; ++k) {
    TLMorphism a = jw_2n_minus_1_term(k, false, ctx);
    EXPECT_EQ(mirror(a), jw_2n_minus_1_term(k, true, ctx));
    EXPECT_EQ(a.source(), 2 * ctx.n - 1);
    EXPECT_EQ(a.target(), 2 * ctx.n - 1);
  }
  EXPECT_THROW(jw_2n_minus_1_term(ctx.n, false, ctx), SkeinError);
}

TEST(ThickJw, DefinedAtEveryRootAndCabled) {
  for (int N = 3; N <= 24; ++N) {
    auto ctx = derive_root_context(N);
    for (int j = 1; j <= 6; ++j) {
      mpq_class expected = j;
      if (ctx.t_sign() < 0 && j % 2 == 0) expected = -expected;
      EXPECT_EQ(thick_quantum_integer(j, ctx), expected) << N << " " << j;
    }
  }
  for (int N : {8, 12}) {
    auto ctx = derive_root_context(N);
    EXPECT_EQ(thick_jw(1, ctx), identity(ctx.ring, ctx.n));
    for (int k = 2; k <= 3; ++k) {
      TLMorphism p = thick_jw(k, ctx);
      EXPECT_EQ(p.source(), k * ctx.n);
      EXPECT_EQ(p.size(), static_cast<size_t>(catalan(k)));
      for (const auto& [m, c] : p.terms()) {
        mpq_class r;
        EXPECT_TRUE(c.as_rational(r)) << c;
      }
    }
  }
}

TEST(ThickJw, CoefficientsAreGenericOnesAtQEqualsT) {
  // Independent check on JW_2: Id + (1/[2]_t) e with [2]_t = 2t.
  for (int N : {8, 12}) {
    auto ctx = derive_root_context(N);
    Ring r = ctx.ring;
    TLMorphism expected = identity(r, 2) +
                          e_generator(r, 2, 0).scaled(r.rational(1 / thick_quantum_integer(2, ctx)));
    EXPECT_EQ(thick_jw(2, ctx), cable(expected, ctx.n)) << N;
  }
}

TEST(JwHat, AxiomsForSmallLevels) {
  for (int N : {8, 12}) {
    auto ctx = derive_root_context(N);
    const int n = ctx.n;
    EXPECT_EQ(jw_hat(0, ctx), jones_wenzl(n - 1, ctx.ring));
    EXPECT_EQ(jw_hat(1, ctx), jw_2n_minus_1(ctx));
    for (int k = 2; k <= 3; ++k) {
      TLMorphism p = jw_hat(k, ctx);
      EXPECT_EQ(p.source(), n - 1 + k * n);
      AxiomReport r = verify_jw_axioms(p);
      EXPECT_TRUE(r.passed()) << N << " " << k << ": " << r.summary();
    }
  }
}

TEST(JwHat, IdempotentAndAbsorbsLowerLevel) {
  auto ctx = derive_root_context(8);
  for (int k = 2; k <= 3; ++k) {
    TLMorphism p = jw_hat(k, ctx);
    EXPECT_EQ(compose(p, p), p) << k;
    TLMorphism lower = pad(jw_hat(k - 1, ctx), 0, ctx.n);
    EXPECT_EQ(compose(lower, p), p) << k;
  }
  auto ctx12 = derive_root_context(12);
  TLMorphism p = jw_hat(2, ctx12);
  EXPECT_EQ(compose(p, p), p);
}

TEST(Dispatch, PicksTheAvailableConstruction) {
  auto ctx = derive_root_context(12);
  EXPECT_EQ(jw_dispatch(2, ctx.ring), jones_wenzl(2, ctx.ring));
  EXPECT_EQ(jw_dispatch(5, ctx.ring), jw_2n_minus_1(ctx));
  EXPECT_EQ(jw_dispatch(8, ctx.ring), jw_hat(2, ctx));
  for (int k : {3, 4, 6, 7}) {
    try {
      jw_dispatch(k, ctx.ring);
      ADD_FAILURE() << k;
    } catch (const SkeinError& e) {
      EXPECT_EQ(e.code(), ErrorCode::BoxNotConstructible) << k;
    }
  }
  EXPECT_EQ(jw_dispatch(7, Ring::generic()), jones_wenzl(7, Ring::generic()));
}

TEST(Axioms, DetectFailures) {
  Ring g = Ring::generic();
  AxiomReport r = verify_jw_axioms(identity(g, 3));
  EXPECT_TRUE(r.identity_coefficient_is_one);
  EXPECT_FALSE(r.uncappable);
  EXPECT_EQ(r.cappable_at.size(), 4u);
  EXPECT_FALSE(verify_jw_axioms(jones_wenzl(3, g).scaled(g.integer(2))).passed());
  EXPECT_THROW(verify_jw_axioms(cap(g, 3, 0)), SkeinError);
}
