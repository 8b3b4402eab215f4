#pragma once

// Expression language for TL morphisms.
//
//   expr   := sum
//   sum    := ["+"|"-"] prod (("+"|"-") prod)*
//   prod   := scalar* seq            (scalars may be separated by "*")
//   seq    := tens (";" tens)*       composition, read bottom to top
//   tens   := factor ("@" factor)*   tensor binds tighter than ";"
//   factor := atom | "(" expr ")"
//   atom   := id(k) | cup(k,i) | cap(k,i) | over(k,i) | under(k,i) | e(k,i)
//           | jw(k) | jw2n1 | jwhat(k) | tjw(k) | cable(expr, c)
//           | encircle(m, poly)
//   scalar := int ["/" int] | "q^(" int "/2)" | "[" k "]" | "[" k "]!"

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skein/chebyshev.hpp"

namespace skein {

struct ScalarLiteral {
  enum class Kind { Rational, HalfPowerOfQ, QuantumInteger, QuantumFactorial };
  Kind kind = Kind::Rational;
  mpq_class rational = 1;
  long index = 0;  // half-exponent of q, or k in [k] / [k]!
};

struct Expr {
  enum class Kind { Sum, Compose, Tensor, Scaled, Atom };
  Kind kind = Kind::Atom;
  int line = 1;
  int column = 1;

  // Sum: children with signs (+1 / -1). Compose: bottom to top. Tensor: left to right.
  std::vector<std::shared_ptr<const Expr>> children;
  std::vector<int> signs;

  // Scaled: product of literals applied to children[0].
  std::vector<ScalarLiteral> scalars;

  // Atom: name and integer arguments; cable keeps its operand in children[0],
  // encircle keeps its polynomial.
  std::string name;
  std::vector<long> args;
  IntPoly poly;

  std::string to_string() const;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Throws SyntaxError with a 1-based line and column.
ExprPtr parse_expression(std::string_view source);

}  // namespace skein
