#include <gtest/gtest.h>

#include <random>

#include "skein/projectors.hpp"
#include "skein/serialize.hpp"

using namespace skein;

TEST(Serialize, RootScalarHasPhiCoefficients) {
  Ring r = Ring::root(12);
  Json j = to_json(r.v_power(1).pow(5) + r.rational(mpq_class(1, 3)));
  EXPECT_EQ(j["N"], 12);
  ASSERT_EQ(j["coeffs"].size(), 4u);
  // zeta_12^5 = zeta^3 - zeta modulo Phi_12 = x^4 - x^2 + 1.
  EXPECT_EQ(j.dump(), R"({"N":12,"coeffs":["1/3","-1","0","1"]})");
  EXPECT_EQ(scalar_from_json(j), r.v_power(1).pow(5) + r.rational(mpq_class(1, 3)));
}

TEST(Serialize, GenericScalarRoundTrip) {
  Ring g = Ring::generic();
  for (const CycScalar& s : {g.zero(), g.one(), g.delta(), g.q().pow(-3) - g.rational(7),
                             quantum_integer(2, g).inverse(), quantum_integer(3, g) / quantum_integer(5, g)})
    EXPECT_EQ(scalar_from_json(to_json(s)), s) << s.to_string();
}

TEST(Serialize, PolynomialKeysAreDegrees) {
  IntPoly p = parse_int_poly("x^2 - 2");
  EXPECT_EQ(to_json(p).dump(), R"({"coeffs":{"2":1,"0":-2}})");
  EXPECT_EQ(poly_from_json(to_json(chebyshev_T(7))), chebyshev_T(7));
}

TEST(Serialize, MorphismRoundTripAndDeterminism) {
  auto ctx = derive_root_context(8);
  TLMorphism f = jw_2n_minus_1(ctx);
  Json j = to_json(f);
  EXPECT_EQ(j["source"], 3);
  EXPECT_EQ(j["target"], 3);
  EXPECT_EQ(j["terms"].size(), f.size());
  for (const auto& t : j["terms"]) EXPECT_EQ(t["pairing"].size(), 6u);
  EXPECT_EQ(morphism_from_json(j), f);
  EXPECT_EQ(to_json(f).dump(), to_json(jw_2n_minus_1(ctx)).dump());
  TLMorphism g = jones_wenzl(4, Ring::generic());
  EXPECT_EQ(morphism_from_json(Json::parse(to_json(g).dump())), g);
  TLMorphism z(Ring::root(12), 2, 4);
  EXPECT_EQ(morphism_from_json(to_json(z)), z);
}

TEST(Serialize, RejectsMalformedInput) {
  const char* bad[] = {
      R"({"source":1,"target":2,"terms":[]})",
      R"({"source":1,"target":1,"terms":[{"pairing":[1,1],"coeff":{"N":8,"coeffs":["1","0","0","0"]}}]})",
      R"({"source":2,"target":2,"terms":[{"pairing":[3,2,1,0],"coeff":{"N":8,"coeffs":["1","0","0","0"]}}]})",
      R"({"source":1,"target":1,"terms":[{"pairing":[1,0],"coeff":{"N":8,"coeffs":["x"]}}]})",
      R"({"source":1,"target":1,"terms":[{"pairing":[1,0]}]})",
  };
  for (const char* s : bad) EXPECT_THROW(morphism_from_json(Json::parse(s)), SkeinError) << s;
  EXPECT_THROW(scalar_from_json(Json::parse(R"({"N":0,"num":{"0":"1"},"den":["0"]})")), SkeinError);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"coeffs":{"-1":1}})")), SkeinError);
}

TEST(Serialize, ReportsOmitTimingsByDefault) {
  CheckReport r;
  r.name = "x";
  r.params = {{"N", 8}, {"m", 2}};
  r.outcome = Outcome::Fail;
  r.reason = "differs";
  r.witness = identity(Ring::root(8), 1);
  r.seconds = 1.5;
  Json j = to_json(r);
  EXPECT_FALSE(j.contains("seconds"));
  EXPECT_EQ(j["params"].dump(), R"({"N":8,"m":2})");
  EXPECT_EQ(j["outcome"], "fail");
  EXPECT_EQ(j["witness"]["terms"].size(), 1u);
  EXPECT_TRUE(to_json(r, true).contains("seconds"));
}
