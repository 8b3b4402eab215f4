#include <gtest/gtest.h>

#include <random>

#include "diagram_oracle.hpp"
#include "skein/chebyshev.hpp"
#include "skein/diagram.hpp"

using namespace skein;

namespace {

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST(Matching, CatalanCounts) {
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(static_cast<long>(enumerate_matchings(k, k).size()), catalan(k)) << k;
  EXPECT_EQ(enumerate_matchings(3, 3).size(), 5u);
  EXPECT_EQ(enumerate_matchings(3, 1).size(), catalan(2));
  EXPECT_TRUE(enumerate_matchings(2, 1).empty());
}

TEST(Matching, EnumeratedAreValid) {
  for (int k = 0; k <= 5; ++k)
    for (int l = k % 2; l <= 5; l += 2)
      for (const auto& m : enumerate_matchings(k, l))
        EXPECT_NO_THROW(PlanarMatching(k, l, m.pairing()));
}

TEST(Matching, RejectsCrossingPairing) {
  // bottom 0 -> top 3, bottom 1 -> top 2 crosses
  EXPECT_THROW(PlanarMatching(2, 2, {3, 2, 1, 0}), SkeinError);
  EXPECT_THROW(PlanarMatching(2, 2, {0, 3, 2, 1}), SkeinError);
  EXPECT_NO_THROW(PlanarMatching(2, 2, {2, 3, 0, 1}));
}

TEST(Compose, AgreesWithUnionFindOracle) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> d(0, 6);
  int checked = 0;
  while (checked < 500) {
    int k = d(rng), l = d(rng), m = d(rng);
    if ((k + l) % 2 || (l + m) % 2) continue;
    auto a = oracle::random_matching(k, l, rng);
    auto b = oracle::random_matching(l, m, rng);
    auto got = glue(a, b);
    auto want = oracle::glue(a, b);
    ASSERT_EQ(got.loops, want.loops);
    for (int p = 0; p < k + m; ++p) ASSERT_EQ(got.matching.partner(p), want.pairing[p]);
    ++checked;
  }
}

TEST(Compose, CapCupGivesLoopValue) {
  for (Ring r : {Ring::generic(), Ring::root(8)}) {
    auto loop = compose(cup(r, 2, 0), cap(r, 2, 0));
    EXPECT_EQ(loop, identity(r, 0).scaled(r.delta()));
    EXPECT_EQ(r.delta(), -r.q() - r.q().inverse());
  }
}

TEST(Compose, GeneratorRelations) {
  Ring r = Ring::generic();
  for (int k = 2; k <= 5; ++k) {
    for (int i = 0; i + 1 < k; ++i) {
      auto e = e_generator(r, k, i);
      EXPECT_EQ(compose(e, e), e.scaled(r.delta()));
      if (i + 2 < k) {
        auto f = e_generator(r, k, i + 1);
        EXPECT_EQ(compose(compose(e, f), e), e);
        EXPECT_EQ(compose(compose(f, e), f), f);
      }
    }
  }
}

TEST(Compose, IdentityAndAssociativity) {
  std::mt19937 rng(5);
  Ring r = Ring::root(12);
  for (int it = 0; it < 100; ++it) {
    auto f = oracle::random_morphism(r, 3, 3, rng);
    auto g = oracle::random_morphism(r, 3, 1, rng);
    auto h = oracle::random_morphism(r, 1, 3, rng);
    EXPECT_EQ(compose(identity(r, 3), f), f);
    EXPECT_EQ(compose(f, identity(r, 3)), f);
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
  }
}

TEST(Compose, SignatureMismatchThrows) {
  Ring r = Ring::generic();
  try {
    (void)compose(identity(r, 2), identity(r, 3));
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SignatureMismatch);
  }
  EXPECT_THROW(cap(r, 3, 2), SkeinError);
  EXPECT_THROW(identity(r, 2) + identity(r, 3), SkeinError);
}

TEST(Tensor, UnitsAndInterchange) {
  std::mt19937 rng(9);
  Ring r = Ring::generic();
  EXPECT_EQ(tensor(identity(r, 1), identity(r, 1)), identity(r, 2));
  for (int it = 0; it < 30; ++it) {
    auto f = oracle::random_morphism(r, 2, 2, rng), f2 = oracle::random_morphism(r, 2, 0, rng);
    auto g = oracle::random_morphism(r, 1, 3, rng), g2 = oracle::random_morphism(r, 3, 1, rng);
    EXPECT_EQ(tensor(f, identity(r, 0)), f);
    EXPECT_EQ(compose(tensor(f, g), tensor(f2, g2)), tensor(compose(f, f2), compose(g, g2)));
  }
  EXPECT_EQ(pad(cap(r, 2, 0), 1, 2), cap(r, 5, 1));
}

TEST(Closure, PartialTraceExamples) {
  Ring r = Ring::generic();
  EXPECT_EQ(partial_trace_right(identity(r, 1), 1), identity(r, 0).scaled(r.delta()));
  EXPECT_EQ(partial_trace_right(e_generator(r, 2, 0), 2), identity(r, 0).scaled(r.delta()));
  EXPECT_EQ(partial_trace_right(e_generator(r, 2, 0), 1), identity(r, 1));
  EXPECT_EQ(partial_trace_right(identity(r, 3), 2), identity(r, 1).scaled(r.delta() * r.delta()));
}

TEST(Closure, PartialTraceMatchesCupCapSandwich) {
  // Closing the right strand equals cup on the right, f beside it, cap on the right.
  std::mt19937 rng(17);
  Ring r = Ring::root(8);
  for (int it = 0; it < 20; ++it) {
    auto f = oracle::random_morphism(r, 3, 3, rng);
    auto lower = compose(pad(cup(r, 2, 0), 2, 0), tensor(f, identity(r, 1)));
    auto closed = compose(lower, pad(cap(r, 2, 0), 2, 0));
    EXPECT_EQ(closed, partial_trace_right(f, 1));
  }
}

TEST(Closure, AnnulusExamples) {
  Ring r = Ring::generic();
  auto x1 = annulus_closure(identity(r, 1));
  ASSERT_EQ(x1.size(), 2u);
  EXPECT_TRUE(x1[0].is_zero());
  EXPECT_TRUE(x1[1].is_one());
  // cap and cup joined by both closure arcs: a single contractible loop
  auto xe = annulus_closure(e_generator(r, 2, 0));
  ASSERT_EQ(xe.size(), 1u);
  EXPECT_EQ(xe[0], r.delta());
  auto x3 = annulus_closure(identity(r, 3));
  ASSERT_EQ(x3.size(), 4u);
  EXPECT_TRUE(x3[3].is_one());
}

TEST(Cable, Examples) {
  Ring r = Ring::generic();
  EXPECT_EQ(cable(identity(r, 1), 3), identity(r, 3));
  // nested double cap: bottom 0-3, 1-2
  auto c = cable(cap(r, 2, 0), 2);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.terms()[0].first.pairing(), (std::vector<uint16_t>{3, 2, 1, 0}));
  auto ce = cable(e_generator(r, 2, 0), 2);
  EXPECT_EQ(compose(ce, ce), ce.scaled(r.delta() * r.delta()));
}

TEST(Cable, FunctorialOnDiagrams) {
  // Each closed loop of the glued diagram becomes c parallel loops.
  std::mt19937 rng(31);
  for (int c = 1; c <= 3; ++c) {
    for (int it = 0; it < 40; ++it) {
      auto a = oracle::random_matching(3, 3, rng);
      auto b = oracle::random_matching(3, 1, rng);
      auto whole = glue(a, b);
      auto cabled = glue(cable(a, c), cable(b, c));
      EXPECT_EQ(cabled.matching, cable(whole.matching, c));
      EXPECT_EQ(cabled.loops, c * whole.loops);
    }
  }
}

TEST(Cable, FunctorialWithoutLoops) {
  std::mt19937 rng(32);
  Ring r = Ring::root(12);
  for (int c = 1; c <= 3; ++c) {
    for (int it = 0; it < 10; ++it) {
      auto f = oracle::random_morphism(r, 2, 2, rng);
      auto g = oracle::random_morphism(r, 2, 0, rng);
      EXPECT_EQ(cable(tensor(f, g), c), tensor(cable(f, c), cable(g, c)));
      EXPECT_EQ(cable(compose(f, identity(r, 2)), c), compose(cable(f, c), identity(r, 2 * c)));
    }
  }
  auto ce = cable(e_generator(r, 3, 0), 2);
  auto cf = cable(e_generator(r, 3, 1), 2);
  EXPECT_EQ(compose(compose(ce, cf), ce), ce);
}

TEST(Reflection, MirrorAndFlip) {
  std::mt19937 rng(41);
  Ring r = Ring::generic();
  EXPECT_EQ(mirror(cap(r, 4, 0)), cap(r, 4, 2));
  EXPECT_EQ(flip(cap(r, 4, 1)), cup(r, 4, 1));
  for (int it = 0; it < 20; ++it) {
    auto f = oracle::random_morphism(r, 3, 1, rng);
    auto g = oracle::random_morphism(r, 1, 3, rng);
    EXPECT_EQ(mirror(compose(f, g)), compose(mirror(f), mirror(g)));
    EXPECT_EQ(flip(compose(f, g)), compose(flip(g), flip(f)));
    EXPECT_EQ(mirror(mirror(f)), f);
  }
}
