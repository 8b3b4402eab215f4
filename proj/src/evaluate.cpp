#include "skein/evaluate.hpp"

#include "skein/chebyshev.hpp"
#include "skein/projectors.hpp"
#include "skein/tangle.hpp"

namespace skein {

namespace {

std::string where(const Expr& e) {
  return std::to_string(e.line) + ":" + std::to_string(e.column);
}

[[noreturn]] void elaboration_error(const Expr& e, const std::string& msg) {
  throw SkeinError(ErrorCode::ElaborationError, "at " + where(e) + ": " + msg);
}

std::string signature(const TLMorphism& f) {
  return std::to_string(f.source()) + "->" + std::to_string(f.target());
}

CycScalar literal(const ScalarLiteral& s, const Ring& ring) {
  switch (s.kind) {
    case ScalarLiteral::Kind::Rational: return ring.rational(s.rational);
    case ScalarLiteral::Kind::HalfPowerOfQ: return ring.v_power(s.index);
    case ScalarLiteral::Kind::QuantumInteger: return quantum_integer(static_cast<int>(s.index), ring);
    case ScalarLiteral::Kind::QuantumFactorial: return quantum_factorial(static_cast<int>(s.index), ring);
  }
  return ring.one();
}

RootContext root_context(const Expr& e, const Ring& ring) {
  if (!ring.is_root()) elaboration_error(e, "'" + e.name + "' needs a root of unity (--root N)");
  return derive_root_context(ring.N());
}

TLMorphism atom(const Expr& e, const Ring& ring) {
  const auto& a = e.args;
  auto arg = [&](size_t i) { return static_cast<int>(a.at(i)); };
  const std::string& name = e.name;
  if (name == "id") return identity(ring, arg(0));
  if (name == "cup") return cup(ring, arg(0), arg(1));
  if (name == "cap") return cap(ring, arg(0), arg(1));
  if (name == "e") return e_generator(ring, arg(0), arg(1));
  if (name == "over" || name == "under") {
    TangleWord w(arg(0));
    name == "over" ? w.over(arg(1)) : w.under(arg(1));
    return resolve(w, ring);
  }
  if (name == "jw") return jw_dispatch(arg(0), ring);
  if (name == "jw2n1") return jw_2n_minus_1(root_context(e, ring));
  if (name == "jwhat") return jw_hat(arg(0), root_context(e, ring));
  if (name == "tjw") return thick_jw(arg(0), root_context(e, ring));
  if (name == "cable") {
    if (arg(0) < 0) elaboration_error(e, "negative cable width");
    return cable(evaluate(*e.children.at(0), ring), arg(0));
  }
  if (name == "encircle") return encircle(arg(0), e.poly, ring);
  elaboration_error(e, "unknown atom '" + name + "'");
}

TLMorphism eval(const Expr& e, const Ring& ring) {
  switch (e.kind) {
    case Expr::Kind::Atom:
      return atom(e, ring);
    case Expr::Kind::Scaled: {
      CycScalar s = ring.one();
      for (const auto& lit : e.scalars) s *= literal(lit, ring);
      return evaluate(*e.children.at(0), ring).scaled(s);
    }
    case Expr::Kind::Compose: {
      TLMorphism acc = evaluate(*e.children.at(0), ring);
      for (size_t i = 1; i < e.children.size(); ++i) {
        TLMorphism next = evaluate(*e.children[i], ring);
        if (acc.target() != next.source())
          elaboration_error(*e.children[i], "cannot stack " + signature(next) + " on top of " + signature(acc));
        acc = compose(acc, next);
      }
      return acc;
    }
    case Expr::Kind::Tensor: {
      TLMorphism acc = evaluate(*e.children.at(0), ring);
      for (size_t i = 1; i < e.children.size(); ++i) acc = tensor(acc, evaluate(*e.children[i], ring));
      return acc;
    }
    case Expr::Kind::Sum: {
      TLMorphism acc = evaluate(*e.children.at(0), ring);
      if (e.signs.at(0) < 0) acc = -acc;
      for (size_t i = 1; i < e.children.size(); ++i) {
        TLMorphism next = evaluate(*e.children[i], ring);
        if (next.source() != acc.source() || next.target() != acc.target())
          elaboration_error(*e.children[i], "cannot add " + signature(next) + " to " + signature(acc));
        acc = e.signs[i] < 0 ? acc - next : acc + next;
      }
      return acc;
    }
  }
  elaboration_error(e, "unknown expression");
}

}  // namespace

TLMorphism evaluate(const Expr& expr, const Ring& ring) {
  try {
    return eval(expr, ring);
  } catch (const SyntaxError&) {
    throw;
  } catch (const SkeinError& err) {
    std::string msg = err.what();
    if (msg.rfind("at ", 0) == 0) throw;
    throw SkeinError(err.code(), "at " + where(expr) + ": " + msg);
  }
}

TLMorphism evaluate_source(std::string_view source, const Ring& ring) {
  return evaluate(*parse_expression(source), ring);
}

}  // namespace skein
