#include <gtest/gtest.h>

#include "skein/chebyshev.hpp"
#include "skein/evaluate.hpp"
#include "skein/projectors.hpp"
#include "skein/tangle.hpp"

using namespace skein;

namespace {

ErrorCode code_of(const std::string& src, const Ring& ring) {
  try {
    (void)evaluate_source(src, ring);
  } catch (const SkeinError& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

}  // namespace

TEST(Evaluate, JwTwoHasIdentityAndOneOverTwo) {
  for (const Ring& ring : {Ring::generic(), Ring::root(12), Ring::root(16)}) {
    TLMorphism f = evaluate_source("jw(2)", ring);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f.coefficient(identity(ring, 2).terms()[0].first), ring.one());
    EXPECT_EQ(f.coefficient(e_generator(ring, 2, 0).terms()[0].first), quantum_integer(2, ring).inverse());
  }
}

TEST(Evaluate, JwTwoAtEightIsNotConstructible) {
  // q = i there, so [2] = 0.
  EXPECT_EQ(code_of("jw(2)", Ring::root(8)), ErrorCode::BoxNotConstructible);
  EXPECT_EQ(evaluate_source("jw(3)", Ring::root(8)), jw_2n_minus_1(derive_root_context(8)));
}

TEST(Evaluate, ScaledSum) {
  Ring g = Ring::generic();
  TLMorphism f = evaluate_source("[2] * id(2) + e(2,0)", g);
  EXPECT_EQ(f, identity(g, 2).scaled(quantum_integer(2, g)) + e_generator(g, 2, 0));
  EXPECT_EQ(evaluate_source("-e(2,0) - 1/2 id(2)", g),
            -e_generator(g, 2, 0) - identity(g, 2).scaled(g.rational(mpq_class(1, 2))));
  EXPECT_EQ(evaluate_source("q^(3/2) [3]! id(1)", g),
            identity(g, 1).scaled(g.v_power(3) * quantum_factorial(3, g)));
}

TEST(Evaluate, CompositionReadsBottomToTop) {
  Ring g = Ring::generic();
  EXPECT_EQ(evaluate_source("cup(2,0) ; cap(2,0)", g), identity(g, 0).scaled(g.delta()));
  EXPECT_EQ(evaluate_source("cap(4,1) ; cup(4,0)", g), compose(cap(g, 4, 1), cup(g, 4, 0)));
  EXPECT_EQ(evaluate_source("id(1) @ e(2,0)", g), tensor(identity(g, 1), e_generator(g, 2, 0)));
}

TEST(Evaluate, ReidemeisterTwo) {
  for (const Ring& ring : {Ring::generic(), Ring::root(8)}) {
    EXPECT_EQ(evaluate_source("over(2,0) ; under(2,0)", ring), identity(ring, 2));
    EXPECT_EQ(evaluate_source("id(1) @ over(2,0) ; under(3,1)", ring), identity(ring, 3));
  }
}

TEST(Evaluate, CableAndEncircle) {
  Ring g = Ring::generic();
  EXPECT_EQ(evaluate_source("cable(e(2,0), 2)", g), cable(e_generator(g, 2, 0), 2));
  EXPECT_EQ(evaluate_source("encircle(2, x^2 - 2)", g), encircle(2, parse_int_poly("x^2-2"), g));
}

TEST(Evaluate, RootOnlyAtoms) {
  auto ctx = derive_root_context(12);
  EXPECT_EQ(evaluate_source("jw2n1", ctx.ring), jw_2n_minus_1(ctx));
  EXPECT_EQ(evaluate_source("jwhat(1)", ctx.ring), jw_hat(1, ctx));
  for (const char* src : {"jw2n1", "jwhat(1)", "tjw(1)"})
    EXPECT_EQ(code_of(src, Ring::generic()), ErrorCode::ElaborationError) << src;
}

TEST(Evaluate, SignatureMismatchNamesThePosition) {
  try {
    (void)evaluate_source("id(2) ;\n  id(3)", Ring::generic());
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ElaborationError);
    EXPECT_EQ(std::string(e.what()).rfind("at 2:3:", 0), 0u) << e.what();
  }
  EXPECT_EQ(code_of("id(2) + id(4)", Ring::generic()), ErrorCode::ElaborationError);
}

TEST(Evaluate, LibraryErrorsKeepTheirCode) {
  EXPECT_EQ(code_of("cap(2,1)", Ring::generic()), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of("id(1) + (id(1) @ cap(2,1))", Ring::generic()), ErrorCode::IndexOutOfRange);
}

TEST(Evaluate, SyntaxErrorsStaySyntaxErrors) {
  for (const char* src : {"", "id(", "jw(2) ;", "[2 id(1)", "id(1) @@ id(1)", "encircle(1, x^)"}) {
    try {
      (void)evaluate_source(src, Ring::generic());
      ADD_FAILURE() << src;
    } catch (const SyntaxError& e) {
      EXPECT_GE(e.column(), 1) << src;
    }
  }
}
