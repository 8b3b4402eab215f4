#include "skein/chebyshev.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>

namespace skein {

IntPoly::IntPoly(std::map<int, long long> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::x_power(int k, long long c) { return IntPoly({{k, c}}); }

void IntPoly::trim() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0) it = c_.erase(it);
    else ++it;
  }
}

long long IntPoly::coeff(int degree) const {
  auto it = c_.find(degree);
  return it == c_.end() ? 0 : it->second;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  auto r = c_;
  for (const auto& [d, c] : o.c_) r[d] += c;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + o * -1; }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  std::map<int, long long> r;
  for (const auto& [d1, c1] : c_)
    for (const auto& [d2, c2] : o.c_) r[d1 + d2] += c1 * c2;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(long long s) const {
  auto r = c_;
  for (auto& [d, c] : r) c *= s;
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto [d, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    long long a = c < 0 ? -c : c;
    if (d == 0 || a != 1) os << a;
    if (d > 0) {
      os << "x";
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

namespace {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view s) : s_(s) {}

  IntPoly parse() {
    skip();
    if (at_end()) fail("empty polynomial");
    IntPoly acc;
    bool first = true;
    while (!at_end()) {
      long long sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc = acc + term() * sign;
      first = false;
      skip();
    }
    return acc;
  }

 private:
  IntPoly term() {
    if (peek() == 'T' || peek() == 'S') {
      char kind = peek();
      ++pos_;
      skip();
      expect('(');
      long long k = number();
      expect(')');
      return kind == 'T' ? chebyshev_T(static_cast<int>(k)) : chebyshev_S(static_cast<int>(k));
    }
    long long coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_coeff = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      }
    }
    if (peek() == 'x') {
      ++pos_;
      skip();
      int d = 1;
      if (peek() == '^') {
        ++pos_;
        skip();
        d = static_cast<int>(number());
      }
      return IntPoly::x_power(d, coeff);
    }
    if (!have_coeff) fail("expected a term");
    return IntPoly::constant(coeff);
  }

  long long number() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s_[pos_++] - '0');
    skip();
    return v;
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip();
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(1, static_cast<int>(pos_) + 1, msg + " in polynomial");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

const IntPoly& chebyshev_memo(int k, bool first_kind) {
  if (k < 0) throw SkeinError(ErrorCode::InvalidArgument, "Chebyshev index must be >= 0");
  static std::mutex mu;
  // deque keeps references stable while growing.
  static std::deque<IntPoly> t_table, s_table;
  std::lock_guard<std::mutex> lock(mu);
  auto& table = first_kind ? t_table : s_table;
  if (table.empty()) {
    table.push_back(IntPoly::constant(first_kind ? 2 : 1));
    table.push_back(IntPoly::x_power(1));
  }
  const IntPoly x = IntPoly::x_power(1);
  while (static_cast<int>(table.size()) <= k) {
    size_t m = table.size();
    table.push_back(x * table[m - 1] - table[m - 2]);
  }
  return table[k];
}

}  // namespace

IntPoly parse_int_poly(std::string_view text) { return PolyLexer(text).parse(); }

CycScalar quantum_integer(int k, const Ring& ring) {
  if (k < 0) throw SkeinError(ErrorCode::InvalidArgument, "quantum integer index must be >= 0");
  CycScalar acc = ring.zero();
  for (int e = k - 1; e >= 1 - k; e -= 2) acc += ring.v_power(2L * e);
  return acc;
}

CycScalar quantum_factorial(int k, const Ring& ring) {
  CycScalar acc = ring.one();
  for (int j = 2; j <= k; ++j) acc *= quantum_integer(j, ring);
  return acc;
}

mpq_class quantum_integer_at_sign(int k, int t_sign) {
  if (k == 0) return 0;
  long long s = (t_sign < 0 && (k - 1) % 2 != 0) ? -1 : 1;
  return mpq_class(static_cast<long>(s * k));
}

const IntPoly& chebyshev_T(int k) { return chebyshev_memo(k, true); }
const IntPoly& chebyshev_S(int k) { return chebyshev_memo(k, false); }

CycScalar evaluate_poly(const IntPoly& p, const CycScalar& a) {
  Ring r = a.ring();
  CycScalar acc = r.zero();
  for (int d = p.degree(); d >= 0; --d) {
    acc = acc * a + r.integer(p.coeff(d));
  }
  return acc;
}

}  // namespace skein
