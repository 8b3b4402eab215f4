#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "skein/chebyshev.hpp"
#include "skein/scalar.hpp"

using namespace skein;

namespace {

// Floating-point image of a root-mode scalar under zeta_N -> exp(2 pi i / N).
std::complex<double> embed(const CycScalar& s) {
  const double pi = std::acos(-1.0);
  std::complex<double> zeta = std::polar(1.0, 2 * pi / s.N());
  std::complex<double> acc = 0, p = 1;
  for (const auto& c : s.root_coeffs()) {
    acc += c.get_d() * p;
    p *= zeta;
  }
  return acc;
}

// Generic scalar evaluated at a real v.
double at_v(const CycScalar& s, double v) {
  double num = 0;
  for (const auto& [e, c] : s.laurent_numerator()) num += c.get_d() * std::pow(v, e);
  double den = 0;
  const auto& d = s.generic_denominator().coeffs();
  for (size_t i = 0; i < d.size(); ++i) den += d[i].get_d() * std::pow(v, static_cast<int>(i));
  return num / den;
}

CycScalar random_root(const Ring& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<mpq_class> c;
  for (int i = 0; i < r.field()->phi + 2; ++i) c.emplace_back(d(rng), 1 + std::abs(d(rng)));
  return r.from_root_coeffs(c);
}

CycScalar random_laurent(const Ring& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::map<int, mpq_class> m;
  for (int i = 0; i < 4; ++i) m[d(rng)] += mpq_class(d(rng), 1 + std::abs(d(rng)));
  return r.laurent(m);
}

}  // namespace

TEST(Cyclotomic, PolynomialDegreeAndKnownValues) {
  for (int N = 1; N <= 40; ++N) EXPECT_EQ(cyclotomic_polynomial(N).degree(), euler_phi(N)) << N;
  // Phi_12 = x^4 - x^2 + 1
  QPoly p12({1, 0, -1, 0, 1});
  EXPECT_EQ(cyclotomic_polynomial(12), p12);
}

TEST(RootScalar, ZetaHasExactOrder) {
  for (int N : {1, 2, 3, 4, 5, 8, 12, 20, 24}) {
    Ring r = Ring::root(N);
    EXPECT_TRUE(r.v_power(N).is_one()) << N;
    for (int k = 1; k < N; ++k) EXPECT_FALSE(r.v_power(k).is_one()) << N << " " << k;
    EXPECT_EQ(r.v_power(-1) * r.v_power(1), r.one());
  }
}

TEST(RootScalar, FieldAxiomsAgainstEmbedding) {
  std::mt19937 rng(7);
  for (int N : {5, 8, 12, 20}) {
    Ring r = Ring::root(N);
    for (int it = 0; it < 30; ++it) {
      auto a = random_root(r, rng), b = random_root(r, rng), c = random_root(r, rng);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_LT(std::abs(embed(a * b) - embed(a) * embed(b)), 1e-7);
      if (!b.is_zero()) {
        EXPECT_EQ((a / b) * b, a);
        EXPECT_LT(std::abs(embed(b.inverse()) - 1.0 / embed(b)), 1e-6);
      }
    }
  }
}

TEST(RootScalar, DivisionByZeroThrows) {
  Ring r = Ring::root(8);
  try {
    (void)(r.one() / r.zero());
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(GenericScalar, RingAxiomsAgainstEvaluation) {
  std::mt19937 rng(11);
  Ring g = Ring::generic();
  for (int it = 0; it < 50; ++it) {
    auto a = random_laurent(g, rng), b = random_laurent(g, rng), c = random_laurent(g, rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, g.zero());
    for (double v : {0.7, 1.3, 2.1}) EXPECT_NEAR(at_v(a * b, v), at_v(a, v) * at_v(b, v), 1e-6);
    if (!b.is_zero()) {
      auto q = a / b;
      EXPECT_EQ(q * b, a);
      for (double v : {0.7, 1.9}) EXPECT_NEAR(at_v(q, v), at_v(a, v) / at_v(b, v), 1e-6);
    }
  }
}

TEST(GenericScalar, StrictDivision) {
  Ring g = Ring::generic();
  auto two = quantum_integer(2, g);
  auto four = quantum_integer(4, g);
  // [4] = [2] (q^2 + q^-2)
  auto q = scalar_arithmetic(four, two, ScalarOp::Div);
  EXPECT_EQ(q, g.v_power(4) + g.v_power(-4));
  try {
    (void)scalar_arithmetic(g.one(), two, ScalarOp::Div);
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InexactDivision);
  }
}

TEST(GenericScalar, ModeMismatch) {
  try {
    (void)(Ring::generic().one() + Ring::root(8).one());
    FAIL();
  } catch (const SkeinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModeMismatch);
  }
}

TEST(GenericScalar, EvaluateAtRoot) {
  Ring g = Ring::generic();
  Ring r = Ring::root(12);
  for (int k = 0; k < 8; ++k)
    EXPECT_EQ(quantum_integer(k, g).evaluate_at(r.v_power(1)), quantum_integer(k, r));
}

TEST(QuantumInteger, MatchesSineRatio) {
  const double pi = std::acos(-1.0);
  for (int N : {5, 7, 8, 12, 20}) {
    Ring r = Ring::root(N);
    double th = 4 * pi / N;  // q = zeta_N^2 = exp(i th)
    for (int k = 0; k < 12; ++k) {
      auto e = embed(quantum_integer(k, r));
      EXPECT_NEAR(e.real(), std::sin(k * th) / std::sin(th), 1e-9);
      EXPECT_NEAR(e.imag(), 0.0, 1e-9);
    }
  }
}

TEST(QuantumInteger, FactorialAndSign) {
  Ring g = Ring::generic();
  EXPECT_EQ(quantum_factorial(3, g), quantum_integer(2, g) * quantum_integer(3, g));
  EXPECT_EQ(quantum_integer_at_sign(4, -1), mpq_class(-4));
  EXPECT_EQ(quantum_integer_at_sign(3, -1), mpq_class(3));
  EXPECT_EQ(quantum_integer_at_sign(5, 1), mpq_class(5));
}

TEST(RootContext, DerivedParameters) {
  auto c8 = derive_root_context(8);
  EXPECT_EQ(c8.n, 2);
  EXPECT_EQ(c8.t_sign(), 1);
  EXPECT_EQ(c8.t_half, c8.ring.integer(-1));
  auto c12 = derive_root_context(12);
  EXPECT_EQ(c12.n, 3);
  EXPECT_EQ(c12.t_sign(), -1);
  EXPECT_EQ(derive_root_context(20).n, 5);
  for (int N : {4, 6, 8, 10, 12, 16, 20, 24}) {
    auto c = derive_root_context(N);
    EXPECT_EQ(c.q.pow(2 * c.n), c.ring.one());
    if (c.n == 1) continue;  // q = +-1: [k] = +-k never vanishes
    EXPECT_TRUE(quantum_integer(c.n, c.ring).is_zero()) << N;
    for (int k = 1; k < c.n; ++k) EXPECT_FALSE(quantum_integer(k, c.ring).is_zero());
  }
}

TEST(Chebyshev, TrigonometricOracle) {
  for (double th : {0.3, 1.1, 2.4}) {
    double x = 2 * std::cos(th);
    for (int k = 0; k < 10; ++k) {
      double t = 0, s = 0;
      for (const auto& [d, c] : chebyshev_T(k).coeffs()) t += c * std::pow(x, d);
      for (const auto& [d, c] : chebyshev_S(k).coeffs()) s += c * std::pow(x, d);
      EXPECT_NEAR(t, 2 * std::cos(k * th), 1e-9);
      EXPECT_NEAR(s, std::sin((k + 1) * th) / std::sin(th), 1e-9);
    }
  }
}

TEST(Chebyshev, ProductRule) {
  // T_j T_k = T_{j+k} + T_{|j-k|} for j, k >= 1
  for (int j = 1; j < 6; ++j)
    for (int k = 1; k < 6; ++k)
      EXPECT_EQ(chebyshev_T(j) * chebyshev_T(k), chebyshev_T(j + k) + chebyshev_T(std::abs(j - k)));
}

TEST(Chebyshev, ParseLiterals) {
  EXPECT_EQ(parse_int_poly("x^2-2"), chebyshev_T(2));
  EXPECT_EQ(parse_int_poly("T(3)"), parse_int_poly("x^3 - 3x"));
  EXPECT_EQ(parse_int_poly("S(2) + 1"), parse_int_poly("x^2"));
  EXPECT_EQ(chebyshev_T(3).to_string(), "x^3 - 3x");
  EXPECT_THROW(parse_int_poly("x^"), SyntaxError);
  EXPECT_THROW(parse_int_poly(""), SyntaxError);
}

TEST(Chebyshev, EvaluateAtLoopValue) {
  // T_k(-q - q^-1) = (-1)^k (q^k + q^-k)
  Ring g = Ring::generic();
  for (int k = 0; k < 7; ++k) {
    auto expect = g.v_power(2 * k) + g.v_power(-2 * k);
    if (k % 2) expect = -expect;
    EXPECT_EQ(evaluate_poly(chebyshev_T(k), g.delta()), expect);
  }
}

TEST(Chebyshev, InitialValuesAndDefiningProperty) {
  const IntPoly x = IntPoly::x_power(1);
  EXPECT_EQ(chebyshev_T(0), IntPoly::x_power(0, 2));
  EXPECT_EQ(chebyshev_T(1), x);
  EXPECT_EQ(chebyshev_S(0), IntPoly::x_power(0));
  EXPECT_EQ(chebyshev_S(1), x);
  for (int k = 2; k <= 20; ++k) EXPECT_EQ(chebyshev_T(k), x * chebyshev_S(k - 1) - chebyshev_S(k - 2) * 2);
  Ring g = Ring::generic();
  const CycScalar q = g.q(), a = q + q.inverse();
  for (int k = 0; k <= 12; ++k) {
    EXPECT_EQ(evaluate_poly(chebyshev_T(k), a), q.pow(k) + q.pow(-k)) << k;
    EXPECT_EQ(evaluate_poly(chebyshev_S(k), a), quantum_integer(k + 1, g)) << k;
  }
}

TEST(QuantumInteger, GenericIsASymmetricSum) {
  Ring g = Ring::generic();
  EXPECT_EQ(quantum_integer(2, g), g.q() + g.q().inverse());
  for (int k = 1; k <= 8; ++k) {
    CycScalar sum = g.zero();
    for (int j = k - 1; j >= 1 - k; j -= 2) sum = sum + g.q().pow(j);
    EXPECT_EQ(quantum_integer(k, g), sum) << k;
  }
}
