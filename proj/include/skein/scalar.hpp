#pragma once

// Exact coefficient arithmetic.
//
// Two modes share one value type, CycScalar:
//   generic  - rational functions in v = q^{1/2} over Q. Laurent polynomials
//              are the common case (denominator 1); proper fractions appear
//              only through Jones-Wenzl denominators such as 1/[k].
//   root(N)  - elements of Q(zeta_N), stored as a polynomial in zeta_N of
//              degree < phi(N) with integer numerators over a common
//              positive denominator.
// Every value is kept in canonical form, so equality is representation
// equality.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "skein/error.hpp"

namespace skein {

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  static QPoly monomial(int degree, const mpq_class& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpq_class& lead() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;
  QPoly scaled(const mpq_class& s) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  // Euclidean division; throws DivisionByZero on a zero divisor.
  void divmod(const QPoly& d, QPoly& quot, QPoly& rem) const;
  QPoly monic() const;
  // Lowest-order nonzero degree (0 for the zero polynomial).
  int valuation() const;
  QPoly shifted_down(int k) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);
// Returns g = gcd(a, b) and s, t with s*a + t*b = g.
QPoly extended_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);

int euler_phi(int n);

// The N-th cyclotomic polynomial: (x^N - 1) divided by Phi_d for all proper
// divisors d of N.
QPoly cyclotomic_polynomial(int N);

struct CyclotomicField {
  int N = 1;
  int phi = 1;
  // Coefficients of Phi_N, lowest first; monic of degree phi.
  std::vector<long> modulus;
  QPoly modulus_poly;
};

// Shared, process-wide field descriptors (thread-safe cache).
std::shared_ptr<const CyclotomicField> cyclotomic_field(int N);

class Ring;

class CycScalar {
 public:
  // Generic-mode zero.
  CycScalar();

  bool is_root() const { return field_ != nullptr; }
  int N() const { return field_ ? field_->N : 0; }
  Ring ring() const;

  bool is_zero() const;
  bool is_one() const;

  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const;
  CycScalar operator*(const CycScalar& o) const;
  // Field division (generic mode divides rational functions).
  CycScalar operator/(const CycScalar& o) const;
  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar inverse() const;
  CycScalar pow(long e) const;

  bool operator==(const CycScalar& o) const;
  bool operator!=(const CycScalar& o) const { return !(*this == o); }

  // Root mode: rational coefficients of zeta_N^0 .. zeta_N^{phi-1}.
  std::vector<mpq_class> root_coeffs() const;
  // Generic mode: Laurent numerator (exponent of v -> coefficient) and the
  // denominator polynomial in v (1 for Laurent polynomials).
  std::map<int, mpq_class> laurent_numerator() const;
  const QPoly& generic_denominator() const { return den_poly_; }
  bool is_laurent() const { return !is_root() && den_poly_.degree() == 0; }

  // If this is a rational number (root mode or generic), returns true and
  // stores it.
  bool as_rational(mpq_class& out) const;

  // Substitutes v -> point in a generic scalar. Throws DivisionByZero if the
  // denominator vanishes at the point.
  CycScalar evaluate_at(const CycScalar& point) const;

  std::string to_string() const;

 private:
  friend class Ring;

  void normalize_root();
  void normalize_generic();
  void check_same_mode(const CycScalar& o) const;

  std::shared_ptr<const CyclotomicField> field_;
  // root mode
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
  // generic mode: v^shift * num_poly(v) / den_poly(v)
  QPoly num_poly_;
  int shift_ = 0;
  QPoly den_poly_ = QPoly::constant(1);
};

// Factory for scalars of one mode.
class Ring {
 public:
  static Ring generic() { return Ring(nullptr); }
  static Ring root(int N) { return Ring(cyclotomic_field(N)); }

  bool is_root() const { return field_ != nullptr; }
  int N() const { return field_ ? field_->N : 0; }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }

  CycScalar zero() const;
  CycScalar one() const { return integer(1); }
  CycScalar integer(long k) const;
  CycScalar rational(const mpq_class& r) const;
  // v^e with v = q^{1/2}; in root mode v = zeta_N.
  CycScalar v_power(long e) const;
  CycScalar q() const { return v_power(2); }
  // Closed loop value -q - q^{-1}.
  CycScalar delta() const;
  // Generic: Laurent polynomial from exponent -> coefficient.
  CycScalar laurent(const std::map<int, mpq_class>& terms) const;
  // Root: from rational coefficients of zeta^i (any length; reduced).
  CycScalar from_root_coeffs(const std::vector<mpq_class>& coeffs) const;

  bool operator==(const Ring& o) const { return N() == o.N(); }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  explicit Ring(std::shared_ptr<const CyclotomicField> f) : field_(std::move(f)) {}
  std::shared_ptr<const CyclotomicField> field_;
};

enum class ScalarOp { Add, Sub, Mul, Div };

// Arithmetic with the strict contract: generic-mode division succeeds only
// when the quotient is again a Laurent polynomial (InexactDivision otherwise).
CycScalar scalar_arithmetic(const CycScalar& a, const CycScalar& b, ScalarOp op);

struct RootContext {
  int N = 1;  // order of v
  int n = 1;  // least m >= 1 with q^m in {+1, -1}
  Ring ring = Ring::root(1);
  CycScalar v;
  CycScalar q;
  CycScalar t_half;  // v^{n^2}
  CycScalar t;       // q^{n^2}, either +1 or -1
  int t_sign() const;
};

RootContext derive_root_context(int N);

inline std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.to_string(); }

}  // namespace skein
