#include "skein/scalar.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace skein {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::QuantumIntegerVanishes: return "QuantumIntegerVanishes";
    case ErrorCode::ThickJWNotDefined: return "ThickJWNotDefined";
    case ErrorCode::BoxNotConstructible: return "BoxNotConstructible";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::NotAClosedComponent: return "NotAClosedComponent";
    case ErrorCode::DanglingGreenEnd: return "DanglingGreenEnd";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ElaborationError: return "ElaborationError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const mpq_class& c) { return QPoly({c}); }

QPoly QPoly::monomial(int degree, const mpq_class& c) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> r(c_);
  for (auto& x : r) x *= s;
  return QPoly(std::move(r));
}

void QPoly::divmod(const QPoly& d, QPoly& quot, QPoly& rem) const {
  if (d.is_zero()) throw SkeinError(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<mpq_class> r(c_);
  const int dd = d.degree();
  std::vector<mpq_class> q(std::max<int>(0, degree() - dd + 1));
  for (int i = degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    mpq_class f = r[i] / d.lead();
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
  }
  quot = QPoly(std::move(q));
  rem = QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / lead());
}

int QPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

QPoly QPoly::shifted_down(int k) const {
  if (k <= 0) return *this;
  return QPoly(std::vector<mpq_class>(c_.begin() + std::min<size_t>(k, c_.size()), c_.end()));
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    mpq_class c = c_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpq_class a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
  // Monic remainders keep the rational coefficients from blowing up.
  if (a.degree() < b.degree()) std::swap(a, b);
  b = b.monic();
  while (!b.is_zero()) {
    QPoly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

QPoly extended_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    QPoly q, r;
    r0.divmod(r1, q, r);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = {};
    t = {};
    return {};
  }
  mpq_class inv = 1 / r0.lead();
  s = s0.scaled(inv);
  t = t0.scaled(inv);
  return r0.scaled(inv);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

QPoly cyclotomic_polynomial(int N) {
  if (N < 1) throw SkeinError(ErrorCode::InvalidArgument, "cyclotomic_polynomial: N must be >= 1");
  QPoly num = QPoly::monomial(N) - QPoly::constant(1);
  for (int d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    QPoly q, r;
    num.divmod(cyclotomic_polynomial(d), q, r);
    num = q;
  }
  return num;
}

std::shared_ptr<const CyclotomicField> cyclotomic_field(int N) {
  if (N < 1) throw SkeinError(ErrorCode::InvalidArgument, "root order N must be >= 1");
  static std::mutex mu;
  static std::unordered_map<int, std::shared_ptr<const CyclotomicField>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  auto f = std::make_shared<CyclotomicField>();
  f->N = N;
  f->modulus_poly = cyclotomic_polynomial(N);
  f->phi = f->modulus_poly.degree();
  for (const auto& c : f->modulus_poly.coeffs()) f->modulus.push_back(c.get_num().get_si());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(N, std::move(f)).first->second;
}

// ---------------------------------------------------------------- CycScalar

namespace {

// Reduces an integer coefficient vector modulo the monic Phi_N in place and
// truncates it to phi entries.
void reduce_mod(std::vector<mpz_class>& v, const CyclotomicField& f) {
  const int phi = f.phi;
  for (int i = static_cast<int>(v.size()) - 1; i >= phi; --i) {
    if (v[i] == 0) continue;
    const mpz_class c = v[i];
    for (int j = 0; j < phi; ++j) {
      long m = f.modulus[j];
      if (m != 0) v[i - phi + j] -= c * m;
    }
    v[i] = 0;
  }
  v.resize(phi);
}

}  // namespace

CycScalar::CycScalar() { num_poly_ = QPoly(); }

Ring CycScalar::ring() const {
  return field_ ? Ring::root(field_->N) : Ring::generic();
}

void CycScalar::check_same_mode(const CycScalar& o) const {
  if (N() != o.N()) {
    throw SkeinError(ErrorCode::ModeMismatch,
                     "scalar mode mismatch (N=" + std::to_string(N()) + " vs N=" +
                         std::to_string(o.N()) + ")");
  }
}

void CycScalar::normalize_root() {
  bool all_zero = true;
  for (const auto& x : num_)
    if (x != 0) { all_zero = false; break; }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& x : num_) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  den_ /= g;
  for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void CycScalar::normalize_generic() {
  if (num_poly_.is_zero()) {
    shift_ = 0;
    den_poly_ = QPoly::constant(1);
    return;
  }
  int vn = num_poly_.valuation();
  num_poly_ = num_poly_.shifted_down(vn);
  shift_ += vn;
  int vd = den_poly_.valuation();
  den_poly_ = den_poly_.shifted_down(vd);
  shift_ -= vd;
  if (den_poly_.degree() > 0) {
    QPoly g = gcd(num_poly_, den_poly_);
    if (g.degree() > 0) {
      QPoly q, r;
      num_poly_.divmod(g, q, r);
      num_poly_ = q;
      den_poly_.divmod(g, q, r);
      den_poly_ = q;
    }
  }
  if (den_poly_.lead() != 1) {
    mpq_class s = 1 / den_poly_.lead();
    num_poly_ = num_poly_.scaled(s);
    den_poly_ = den_poly_.scaled(s);
  }
}

bool CycScalar::is_zero() const {
  if (field_) {
    for (const auto& x : num_)
      if (x != 0) return false;
    return true;
  }
  return num_poly_.is_zero();
}

bool CycScalar::is_one() const {
  if (field_) {
    if (den_ != 1 || num_[0] != 1) return false;
    for (size_t i = 1; i < num_.size(); ++i)
      if (num_[i] != 0) return false;
    return true;
  }
  return shift_ == 0 && den_poly_.degree() == 0 && num_poly_.degree() == 0 &&
         num_poly_.lead() == 1;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  CycScalar r = *this;
  r += o;
  return r;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
  CycScalar r = *this;
  r -= o;
  return r;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  if (field_) {
    for (auto& x : r.num_) x = -x;
  } else {
    r.num_poly_ = -r.num_poly_;
  }
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  check_same_mode(o);
  if (field_) {
    if (den_ == o.den_) {
      for (size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
      normalize_root();
    } else {
      for (size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
      den_ *= o.den_;
      normalize_root();
    }
    return *this;
  }
  if (o.num_poly_.is_zero()) return *this;
  if (num_poly_.is_zero()) {
    *this = o;
    return *this;
  }
  int s = std::min(shift_, o.shift_);
  QPoly a = num_poly_ * QPoly::monomial(shift_ - s);
  QPoly b = o.num_poly_ * QPoly::monomial(o.shift_ - s);
  if (den_poly_ == o.den_poly_) {
    num_poly_ = a + b;
  } else {
    num_poly_ = a * o.den_poly_ + b * den_poly_;
    den_poly_ = den_poly_ * o.den_poly_;
  }
  shift_ = s;
  normalize_generic();
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  check_same_mode(o);
  if (field_) {
    const int phi = field_->phi;
    std::vector<mpz_class> prod(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
      if (num_[i] == 0) continue;
      for (int j = 0; j < phi; ++j) {
        if (o.num_[j] == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
      }
    }
    reduce_mod(prod, *field_);
    num_ = std::move(prod);
    den_ *= o.den_;
    normalize_root();
    return *this;
  }
  if (num_poly_.is_zero() || o.num_poly_.is_zero()) {
    *this = CycScalar();
    return *this;
  }
  num_poly_ = num_poly_ * o.num_poly_;
  den_poly_ = den_poly_ * o.den_poly_;
  shift_ += o.shift_;
  normalize_generic();
  return *this;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
  CycScalar r = *this;
  r *= o;
  return r;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw SkeinError(ErrorCode::DivisionByZero, "division by zero scalar");
  if (field_) {
    std::vector<mpq_class> a(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) a[i] = mpq_class(num_[i], den_);
    QPoly s, t;
    QPoly g = extended_gcd(QPoly(std::move(a)), field_->modulus_poly, s, t);
    if (g.degree() != 0) throw SkeinError(ErrorCode::Internal, "non-invertible cyclotomic element");
    return Ring::root(field_->N).from_root_coeffs(s.coeffs());
  }
  CycScalar r;
  r.num_poly_ = den_poly_;
  r.den_poly_ = num_poly_;
  r.shift_ = -shift_;
  r.normalize_generic();
  return r;
}

CycScalar CycScalar::operator/(const CycScalar& o) const {
  check_same_mode(o);
  return *this * o.inverse();
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar result = ring().one();
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool CycScalar::operator==(const CycScalar& o) const {
  if (N() != o.N()) return false;
  if (field_) return den_ == o.den_ && num_ == o.num_;
  return shift_ == o.shift_ && num_poly_ == o.num_poly_ && den_poly_ == o.den_poly_;
}

std::vector<mpq_class> CycScalar::root_coeffs() const {
  std::vector<mpq_class> out;
  for (const auto& x : num_) {
    mpq_class c(x, den_);
    c.canonicalize();
    out.push_back(c);
  }
  return out;
}

std::map<int, mpq_class> CycScalar::laurent_numerator() const {
  std::map<int, mpq_class> out;
  const auto& c = num_poly_.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out[shift_ + static_cast<int>(i)] = c[i];
  return out;
}

bool CycScalar::as_rational(mpq_class& out) const {
  if (field_) {
    for (size_t i = 1; i < num_.size(); ++i)
      if (num_[i] != 0) return false;
    out = mpq_class(num_[0], den_);
    out.canonicalize();
    return true;
  }
  if (num_poly_.is_zero()) {
    out = 0;
    return true;
  }
  if (shift_ != 0 || num_poly_.degree() != 0 || den_poly_.degree() != 0) return false;
  out = num_poly_.lead();
  return true;
}

CycScalar CycScalar::evaluate_at(const CycScalar& point) const {
  if (field_) throw SkeinError(ErrorCode::ModeMismatch, "evaluate_at expects a generic scalar");
  Ring r = point.ring();
  auto horner = [&](const QPoly& p) {
    CycScalar acc = r.zero();
    const auto& c = p.coeffs();
    for (int i = p.degree(); i >= 0; --i) acc = acc * point + r.rational(c[i]);
    return acc;
  };
  CycScalar den = horner(den_poly_);
  if (den.is_zero()) {
    throw SkeinError(ErrorCode::DivisionByZero, "denominator vanishes at the evaluation point");
  }
  return horner(num_poly_) * point.pow(shift_) / den;
}

std::string CycScalar::to_string() const {
  if (field_) {
    std::vector<mpq_class> c(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) {
      c[i] = mpq_class(num_[i], den_);
      c[i].canonicalize();
    }
    return QPoly(std::move(c)).to_string("z");
  }
  std::string num;
  if (num_poly_.is_zero()) return "0";
  {
    std::ostringstream os;
    bool first = true;
    auto terms = laurent_numerator();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      mpq_class c = it->second;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      mpq_class a = abs(c);
      if (it->first == 0 || a != 1) os << a.get_str();
      if (it->first != 0) {
        if (a != 1) os << "*";
        os << "v";
        if (it->first != 1) os << "^" << it->first;
      }
      first = false;
    }
    num = os.str();
  }
  if (den_poly_.degree() == 0) return num;
  return "(" + num + ")/(" + den_poly_.to_string("v") + ")";
}

// ---------------------------------------------------------------- Ring

CycScalar Ring::zero() const { return integer(0); }

CycScalar Ring::integer(long k) const { return rational(mpq_class(k)); }

CycScalar Ring::rational(const mpq_class& input) const {
  mpq_class r = input;
  r.canonicalize();
  CycScalar s;
  if (field_) {
    s.field_ = field_;
    s.num_.assign(field_->phi, 0);
    s.num_[0] = r.get_num();
    s.den_ = r.get_den();
    s.normalize_root();
  } else {
    s.num_poly_ = QPoly::constant(r);
  }
  return s;
}

CycScalar Ring::v_power(long e) const {
  CycScalar s;
  if (field_) {
    const long N = field_->N;
    long k = ((e % N) + N) % N;
    std::vector<mpz_class> v(std::max<long>(k + 1, field_->phi));
    v[k] = 1;
    reduce_mod(v, *field_);
    s.field_ = field_;
    s.num_ = std::move(v);
    s.den_ = 1;
  } else {
    s.num_poly_ = QPoly::constant(1);
    s.shift_ = static_cast<int>(e);
  }
  return s;
}

CycScalar Ring::delta() const { return -(v_power(2) + v_power(-2)); }

CycScalar Ring::laurent(const std::map<int, mpq_class>& terms) const {
  CycScalar acc = zero();
  for (const auto& [e, c] : terms) acc += rational(c) * v_power(e);
  return acc;
}

CycScalar Ring::from_root_coeffs(const std::vector<mpq_class>& coeffs) const {
  if (!field_) throw SkeinError(ErrorCode::ModeMismatch, "from_root_coeffs on a generic ring");
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> v(std::max<size_t>(coeffs.size(), field_->phi));
  for (size_t i = 0; i < coeffs.size(); ++i) v[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  // Callers may pass non-canonical fractions; normalize_root removes the
  // common factor below.
  reduce_mod(v, *field_);
  CycScalar s;
  s.field_ = field_;
  s.num_ = std::move(v);
  s.den_ = den;
  s.normalize_root();
  return s;
}

std::string Ring::describe() const {
  return field_ ? "root(N=" + std::to_string(field_->N) + ")" : "generic";
}

CycScalar scalar_arithmetic(const CycScalar& a, const CycScalar& b, ScalarOp op) {
  if (a.N() != b.N()) {
    throw SkeinError(ErrorCode::ModeMismatch, "scalar mode mismatch");
  }
  switch (op) {
    case ScalarOp::Add: return a + b;
    case ScalarOp::Sub: return a - b;
    case ScalarOp::Mul: return a * b;
    case ScalarOp::Div: {
      if (b.is_zero()) throw SkeinError(ErrorCode::DivisionByZero, "division by zero scalar");
      CycScalar r = a / b;
      if (!r.is_root() && !r.is_laurent()) {
        throw SkeinError(ErrorCode::InexactDivision,
                         "quotient is not a Laurent polynomial in q^{1/2}");
      }
      return r;
    }
  }
  throw SkeinError(ErrorCode::Internal, "unknown scalar op");
}

// ---------------------------------------------------------------- RootContext

int RootContext::t_sign() const { return t.is_one() ? 1 : -1; }

RootContext derive_root_context(int N) {
  RootContext ctx;
  ctx.N = N;
  ctx.ring = Ring::root(N);
  ctx.v = ctx.ring.v_power(1);
  ctx.q = ctx.ring.v_power(2);
  const CycScalar one = ctx.ring.one();
  const CycScalar minus_one = -one;
  CycScalar qm = ctx.q;
  int m = 1;
  while (!(qm == one || qm == minus_one)) {
    qm *= ctx.q;
    ++m;
  }
  ctx.n = m;
  ctx.t_half = ctx.ring.v_power(static_cast<long>(m) * m);
  ctx.t = ctx.t_half * ctx.t_half;
  CycScalar lhs = ((m - 1) % 2 == 0 ? one : minus_one) * qm;
  if (lhs != ctx.t) {
    throw SkeinError(ErrorCode::Internal, "(-1)^{n-1} q^n != t for N=" + std::to_string(N));
  }
  return ctx;
}

}  // namespace skein
