#pragma once

// Quantum integers and the Chebyshev polynomials T_k (first kind, T_0 = 2)
// and S_k (second kind, S_0 = 1), both with X_k = x X_{k-1} - X_{k-2}.

#include <map>
#include <string>
#include <string_view>

#include "skein/scalar.hpp"

namespace skein {

// Integer polynomial in x, sparse and canonical (no zero coefficients).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::map<int, long long> coeffs);
  static IntPoly x_power(int k, long long c = 1);
  static IntPoly constant(long long c) { return x_power(0, c); }

  const std::map<int, long long>& coeffs() const { return c_; }
  long long coeff(int degree) const;
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  bool is_zero() const { return c_.empty(); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(long long s) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::map<int, long long> c_;
};

// Parses literals such as "x^2-2", "3x^3 - x + 1", "T(3)", "S(2)".
IntPoly parse_int_poly(std::string_view text);

// q^{k-1} + q^{k-3} + ... + q^{1-k}; [0] = 0.
CycScalar quantum_integer(int k, const Ring& ring);
CycScalar quantum_factorial(int k, const Ring& ring);
// [k] at the scalar parameter t = +-1, i.e. k * t^{k-1}.
mpq_class quantum_integer_at_sign(int k, int t_sign);

// Memoized (thread-safe).
const IntPoly& chebyshev_T(int k);
const IntPoly& chebyshev_S(int k);

// Horner evaluation P(a).
CycScalar evaluate_poly(const IntPoly& p, const CycScalar& a);

}  // namespace skein
