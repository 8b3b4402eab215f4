#include "skein/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace skein {

// ---------------------------------------------------------------- matchings

PlanarMatching::PlanarMatching(int bottom, int top, std::vector<uint16_t> pairing)
    : k_(bottom), l_(top), pair_(std::move(pairing)) {
  if (bottom < 0 || top < 0 || static_cast<int>(pair_.size()) != bottom + top)
    throw SkeinError(ErrorCode::InvalidArgument, "pairing length does not match signature");
  for (int p = 0; p < size(); ++p) {
    int q = pair_[p];
    if (q >= size() || q == p || pair_[q] != p)
      throw SkeinError(ErrorCode::InvalidArgument, "pairing is not a fixed-point-free involution");
  }
  if (!is_noncrossing(bottom, top, pair_))
    throw SkeinError(ErrorCode::InvalidArgument, "pairing is not planar");
}

PlanarMatching PlanarMatching::trusted(int bottom, int top, std::vector<uint16_t> pairing) {
  PlanarMatching m;
  m.k_ = bottom;
  m.l_ = top;
  m.pair_ = std::move(pairing);
  return m;
}

bool PlanarMatching::operator<(const PlanarMatching& o) const {
  if (k_ != o.k_) return k_ < o.k_;
  if (l_ != o.l_) return l_ < o.l_;
  return pair_ < o.pair_;
}

size_t PlanarMatching::hash() const {
  size_t h = 1469598103934665603ULL ^ (static_cast<size_t>(k_) << 8) ^ l_;
  for (auto p : pair_) h = (h ^ p) * 1099511628211ULL;
  return h;
}

std::string PlanarMatching::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int p = 0; p < size(); ++p) {
    if (pair_[p] < p) continue;
    if (!first) os << ",";
    os << "(" << p << "," << pair_[p] << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

bool is_noncrossing(int bottom, int top, const std::vector<uint16_t>& pairing) {
  const int n = bottom + top;
  if (static_cast<int>(pairing.size()) != n) return false;
  auto cyc = [&](int p) { return p < bottom ? p : bottom + (n - 1 - p); };
  auto pt = [&](int c) { return c < bottom ? c : bottom + (n - 1 - c); };
  std::vector<int> stack;
  for (int c = 0; c < n; ++c) {
    int d = cyc(pairing[pt(c)]);
    if (d > c) {
      stack.push_back(c);
    } else {
      if (stack.empty() || stack.back() != d) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

namespace {

// Noncrossing perfect matchings of cyclic positions [lo, hi).
void enumerate_cyclic(int lo, int hi, std::vector<int>& cur,
                      const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  for (int j = lo + 1; j < hi; j += 2) {
    cur[lo] = j;
    cur[j] = lo;
    enumerate_cyclic(lo + 1, j, cur, [&] { enumerate_cyclic(j + 1, hi, cur, emit); });
  }
}

}  // namespace

std::vector<PlanarMatching> enumerate_matchings(int bottom, int top) {
  std::vector<PlanarMatching> out;
  const int n = bottom + top;
  if (bottom < 0 || top < 0 || n % 2 != 0) return out;
  std::vector<int> cur(n, -1);
  auto pt = [&](int c) { return c < bottom ? c : bottom + (n - 1 - c); };
  enumerate_cyclic(0, n, cur, [&] {
    std::vector<uint16_t> pairing(n);
    for (int c = 0; c < n; ++c) pairing[pt(c)] = static_cast<uint16_t>(pt(cur[c]));
    out.push_back(PlanarMatching::trusted(bottom, top, std::move(pairing)));
  });
  std::sort(out.begin(), out.end());
  return out;
}

GlueResult glue(const PlanarMatching& lower, const PlanarMatching& upper) {
  const int k = lower.bottom();
  const int l = lower.top();
  const int m = upper.top();
  if (upper.bottom() != l)
    throw SkeinError(ErrorCode::SignatureMismatch, "glue: signatures do not match");
  std::vector<uint16_t> out(k + m);
  std::vector<char> seen(l, 0);
  // Follows a path entering the middle row at point j from the given side
  // until it leaves through an external point (returned in result indexing).
  auto walk = [&](int j, bool into_upper) {
    for (;;) {
      seen[j] = 1;
      if (into_upper) {
        int q = upper.partner(j);
        if (q >= l) return k + (q - l);
        j = q;
      } else {
        int p = lower.partner(k + j);
        if (p < k) return p;
        j = p - k;
      }
      seen[j] = 1;
      into_upper = !into_upper;
    }
  };
  for (int i = 0; i < k; ++i) {
    int p = lower.partner(i);
    int end = p < k ? p : walk(p - k, true);
    out[i] = static_cast<uint16_t>(end);
    out[end] = static_cast<uint16_t>(i);
  }
  for (int j = 0; j < m; ++j) {
    int q = upper.partner(l + j);
    int end = q >= l ? k + (q - l) : walk(q, false);
    out[k + j] = static_cast<uint16_t>(end);
    out[end] = static_cast<uint16_t>(k + j);
  }
  int loops = 0;
  for (int j = 0; j < l; ++j) {
    if (seen[j]) continue;
    ++loops;
    int cur = j;
    do {
      seen[cur] = 1;
      int q = upper.partner(cur);  // stays in the middle row
      seen[q] = 1;
      cur = lower.partner(k + q) - k;
    } while (cur != j);
  }
  return {PlanarMatching::trusted(k, m, std::move(out)), loops};
}

// ---------------------------------------------------------------- morphisms

TLMorphism::TLMorphism(Ring ring, int source, int target)
    : ring_(std::move(ring)), k_(source), l_(target) {}

TLMorphism::TLMorphism(Ring ring, int source, int target, std::vector<Term> terms)
    : ring_(std::move(ring)), k_(source), l_(target) {
  canonicalize(std::move(terms));
}

void TLMorphism::canonicalize(std::vector<Term> terms) {
  for (const auto& [m, c] : terms) {
    if (m.bottom() != k_ || m.top() != l_)
      throw SkeinError(ErrorCode::SignatureMismatch, "term signature differs from morphism");
    if (c.N() != ring_.N())
      throw SkeinError(ErrorCode::ModeMismatch, "term coefficient has the wrong mode");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  terms_.clear();
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
    } else {
      if (!terms_.empty() && terms_.back().second.is_zero()) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().second.is_zero()) terms_.pop_back();
}

void TLMorphism::check_compatible(const TLMorphism& o) const {
  if (ring_ != o.ring_) throw SkeinError(ErrorCode::ModeMismatch, "morphisms over different rings");
  if (k_ != o.k_ || l_ != o.l_)
    throw SkeinError(ErrorCode::SignatureMismatch,
                     "signature (" + std::to_string(k_) + "," + std::to_string(l_) +
                         ") vs (" + std::to_string(o.k_) + "," + std::to_string(o.l_) + ")");
}

CycScalar TLMorphism::coefficient(const PlanarMatching& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const PlanarMatching& x) { return t.first < x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return ring_.zero();
}

CycScalar TLMorphism::identity_coefficient() const {
  if (k_ != l_) return ring_.zero();
  std::vector<uint16_t> p(2 * k_);
  for (int i = 0; i < k_; ++i) {
    p[i] = static_cast<uint16_t>(k_ + i);
    p[k_ + i] = static_cast<uint16_t>(i);
  }
  return coefficient(PlanarMatching::trusted(k_, k_, std::move(p)));
}

TLMorphism TLMorphism::operator+(const TLMorphism& o) const {
  check_compatible(o);
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return TLMorphism(ring_, k_, l_, std::move(all));
}

TLMorphism TLMorphism::operator-(const TLMorphism& o) const { return *this + (-o); }

TLMorphism TLMorphism::operator-() const {
  TLMorphism r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

TLMorphism TLMorphism::scaled(const CycScalar& s) const {
  if (s.N() != ring_.N()) throw SkeinError(ErrorCode::ModeMismatch, "scalar has the wrong mode");
  if (s.is_zero()) return TLMorphism(ring_, k_, l_);
  TLMorphism r = *this;
  for (auto& t : r.terms_) t.second *= s;
  return r;
}

bool TLMorphism::operator==(const TLMorphism& o) const {
  return ring_ == o.ring_ && k_ == o.k_ && l_ == o.l_ && terms_.size() == o.terms_.size() &&
         std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                    [](const Term& a, const Term& b) {
                      return a.first == b.first && a.second == b.second;
                    });
}

TLMorphism TLMorphism::map_coefficients(
    const Ring& target_ring, const std::function<CycScalar(const CycScalar&)>& fn) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.emplace_back(m, fn(c));
  return TLMorphism(target_ring, k_, l_, std::move(out));
}

std::string TLMorphism::to_string() const {
  std::ostringstream os;
  os << "TL(" << k_ << "->" << l_ << ")[";
  if (terms_.empty()) os << "0";
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << "(" << terms_[i].second.to_string() << ")" << terms_[i].first.to_string();
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- builders

TLMorphism from_matching(const Ring& ring, const PlanarMatching& m, const CycScalar& coeff) {
  return TLMorphism(ring, m.bottom(), m.top(), {{m, coeff}});
}

TLMorphism identity(const Ring& ring, int k) {
  if (k < 0) throw SkeinError(ErrorCode::InvalidArgument, "negative strand count");
  std::vector<uint16_t> p(2 * k);
  for (int i = 0; i < k; ++i) {
    p[i] = static_cast<uint16_t>(k + i);
    p[k + i] = static_cast<uint16_t>(i);
  }
  return from_matching(ring, PlanarMatching::trusted(k, k, std::move(p)), ring.one());
}

TLMorphism cap(const Ring& ring, int k, int i) {
  if (k < 2 || i < 0 || i > k - 2)
    throw SkeinError(ErrorCode::IndexOutOfRange,
                     "cap(" + std::to_string(k) + "," + std::to_string(i) + ") out of range");
  const int l = k - 2;
  std::vector<uint16_t> p(k + l);
  auto link = [&](int a, int b) {
    p[a] = static_cast<uint16_t>(b);
    p[b] = static_cast<uint16_t>(a);
  };
  link(i, i + 1);
  for (int j = 0; j < l; ++j) link(j < i ? j : j + 2, k + j);
  return from_matching(ring, PlanarMatching::trusted(k, l, std::move(p)), ring.one());
}

TLMorphism cup(const Ring& ring, int k, int i) { return flip(cap(ring, k, i)); }

TLMorphism e_generator(const Ring& ring, int k, int i) {
  return compose(cap(ring, k, i), cup(ring, k, i));
}

TLMorphism nested_cup(const Ring& ring, int W, int x, int w) {
  const int k = W, l = W + 2 * w;
  std::vector<uint16_t> p(k + l);
  auto link = [&](int a, int b) {
    p[a] = static_cast<uint16_t>(b);
    p[b] = static_cast<uint16_t>(a);
  };
  for (int j = 0; j < w; ++j) link(k + x + j, k + x + 2 * w - 1 - j);
  for (int i = 0; i < W; ++i) link(i, k + (i < x ? i : i + 2 * w));
  return from_matching(ring, PlanarMatching::trusted(k, l, std::move(p)), ring.one());
}

TLMorphism nested_cap(const Ring& ring, int W, int x, int w) {
  return flip(nested_cup(ring, W - 2 * w, x, w));
}

// ---------------------------------------------------------------- composition

namespace {

// Least common multiple of the generic denominators, as a scalar.
CycScalar common_denominator(const TLMorphism& f) {
  QPoly lcm = QPoly::constant(1);
  for (const auto& t : f.terms()) {
    const QPoly& d = t.second.generic_denominator();
    if (d.degree() <= 0) continue;
    QPoly g = gcd(lcm, d), q, r;
    d.divmod(g, q, r);
    lcm = lcm * q;
  }
  std::map<int, mpq_class> coeffs;
  for (int i = 0; i <= lcm.degree(); ++i)
    if (lcm.coeff(i) != 0) coeffs[i] = lcm.coeff(i);
  return f.ring().laurent(coeffs);
}

// Integer Laurent polynomial sum_i c[i] v^(low+i).
struct ZLaurent {
  int low = 0;
  std::vector<mpz_class> c;
};

void mul_add(ZLaurent& acc, const ZLaurent& a, const ZLaurent& b) {
  if (a.c.empty() || b.c.empty()) return;
  const int lo = a.low + b.low;
  const int hi = lo + static_cast<int>(a.c.size() + b.c.size()) - 2;
  if (acc.c.empty()) {
    acc.low = lo;
    acc.c.assign(hi - lo + 1, 0);
  } else {
    if (lo < acc.low) {
      acc.c.insert(acc.c.begin(), acc.low - lo, mpz_class(0));
      acc.low = lo;
    }
    const int top = acc.low + static_cast<int>(acc.c.size()) - 1;
    if (hi > top) acc.c.resize(acc.c.size() + (hi - top));
  }
  const int off = lo - acc.low;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      mpz_addmul(acc.c[off + i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
  }
}

ZLaurent times(const ZLaurent& a, const ZLaurent& b) {
  ZLaurent r;
  mul_add(r, a, b);
  return r;
}

// Clears generic and rational denominators of every coefficient; returns the
// integer numerators and stores the factor that was applied.
std::vector<ZLaurent> integer_numerators(const TLMorphism& f, CycScalar& factor) {
  CycScalar d = common_denominator(f);
  std::vector<std::map<int, mpq_class>> cleared;
  mpz_class den_lcm = 1;
  for (const auto& t : f.terms()) {
    cleared.push_back((t.second * d).laurent_numerator());
    for (const auto& [e, c] : cleared.back())
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<ZLaurent> out;
  out.reserve(cleared.size());
  for (const auto& m : cleared) {
    ZLaurent z;
    z.low = m.begin()->first;
    z.c.assign(m.rbegin()->first - z.low + 1, 0);
    for (const auto& [e, c] : m) z.c[e - z.low] = c.get_num() * (den_lcm / c.get_den());
    out.push_back(std::move(z));
  }
  factor = d * f.ring().rational(mpq_class(den_lcm));
  return out;
}

CycScalar to_scalar(const Ring& ring, const ZLaurent& z) {
  std::map<int, mpq_class> m;
  for (size_t i = 0; i < z.c.size(); ++i)
    if (z.c[i] != 0) m[z.low + static_cast<int>(i)] = mpq_class(z.c[i]);
  return ring.laurent(m);
}

// Generic composition: the inner loop multiplies integer Laurent numerators
// and never takes a polynomial gcd.
TLMorphism compose_generic(const TLMorphism& f, const TLMorphism& g) {
  const Ring& ring = f.ring();
  CycScalar ff = ring.one(), gf = ring.one();
  std::vector<ZLaurent> fc = integer_numerators(f, ff);
  std::vector<ZLaurent> gc = integer_numerators(g, gf);
  // -q - q^{-1} = -v^{-2} - v^2
  const ZLaurent delta{-2, {mpz_class(-1), 0, 0, 0, mpz_class(-1)}};
  // g_loops[j][L] = gc[j] * delta^L, filled on demand.
  std::vector<std::vector<ZLaurent>> g_loops(gc.size());
  std::unordered_map<PlanarMatching, ZLaurent, PlanarMatchingHash> acc;
  acc.reserve(f.size() * 2 + 16);
  for (size_t i = 0; i < fc.size(); ++i) {
    const PlanarMatching& mf = f.terms()[i].first;
    for (size_t j = 0; j < gc.size(); ++j) {
      GlueResult r = glue(mf, g.terms()[j].first);
      auto& powers = g_loops[j];
      if (powers.empty()) powers.push_back(gc[j]);
      while (static_cast<int>(powers.size()) <= r.loops)
        powers.push_back(times(powers.back(), delta));
      mul_add(acc[std::move(r.matching)], fc[i], powers[r.loops]);
    }
  }
  const CycScalar scale = (ff * gf).inverse();
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, z] : acc) {
    CycScalar c = to_scalar(ring, z);
    if (!c.is_zero()) terms.emplace_back(m, c * scale);
  }
  return TLMorphism(ring, f.source(), g.target(), std::move(terms));
}

}  // namespace

TLMorphism compose(const TLMorphism& f, const TLMorphism& g) {
  if (f.ring() != g.ring()) throw SkeinError(ErrorCode::ModeMismatch, "compose: rings differ");
  if (f.target() != g.source())
    throw SkeinError(ErrorCode::SignatureMismatch,
                     "compose: target " + std::to_string(f.target()) + " != source " +
                         std::to_string(g.source()));
  if (!f.ring().is_root()) return compose_generic(f, g);
  const Ring& ring = f.ring();
  std::vector<CycScalar> delta_pow{ring.one()};
  const CycScalar delta = ring.delta();
  std::unordered_map<PlanarMatching, CycScalar, PlanarMatchingHash> acc;
  acc.reserve(f.size() * 2 + 16);
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      GlueResult r = glue(mf, mg);
      while (static_cast<int>(delta_pow.size()) <= r.loops)
        delta_pow.push_back(delta_pow.back() * delta);
      CycScalar c = cf * cg;
      if (r.loops) c *= delta_pow[r.loops];
      auto [it, inserted] = acc.try_emplace(std::move(r.matching), c);
      if (!inserted) it->second += c;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.emplace_back(m, std::move(c));
  return TLMorphism(ring, f.source(), g.target(), std::move(terms));
}

namespace {

// Places a on the left and b on the right.
PlanarMatching tensor_matchings(const PlanarMatching& a, const PlanarMatching& b) {
  const int k1 = a.bottom(), l1 = a.top(), k2 = b.bottom(), l2 = b.top();
  const int k = k1 + k2;
  auto map_a = [&](int p) { return p < k1 ? p : k + (p - k1); };
  auto map_b = [&](int p) { return p < k2 ? k1 + p : k + l1 + (p - k2); };
  std::vector<uint16_t> out(k + l1 + l2);
  for (int p = 0; p < a.size(); ++p) out[map_a(p)] = static_cast<uint16_t>(map_a(a.partner(p)));
  for (int p = 0; p < b.size(); ++p) out[map_b(p)] = static_cast<uint16_t>(map_b(b.partner(p)));
  return PlanarMatching::trusted(k, l1 + l2, std::move(out));
}

}  // namespace

TLMorphism tensor(const TLMorphism& f, const TLMorphism& g) {
  if (f.ring() != g.ring()) throw SkeinError(ErrorCode::ModeMismatch, "tensor: rings differ");
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) terms.emplace_back(tensor_matchings(mf, mg), cf * cg);
  return TLMorphism(f.ring(), f.source() + g.source(), f.target() + g.target(), std::move(terms));
}

TLMorphism pad(const TLMorphism& f, int left, int right) {
  if (left < 0 || right < 0) throw SkeinError(ErrorCode::InvalidArgument, "negative padding");
  if (left == 0 && right == 0) return f;
  const Ring& ring = f.ring();
  return tensor(tensor(identity(ring, left), f), identity(ring, right));
}

// ---------------------------------------------------------------- closures

TLMorphism partial_trace_right(const TLMorphism& f, int r) {
  const int k = f.source();
  if (f.target() != k)
    throw SkeinError(ErrorCode::SignatureMismatch, "partial trace needs an endomorphism");
  if (r < 0 || r > k) throw SkeinError(ErrorCode::IndexOutOfRange, "partial trace width out of range");
  const int kk = k - r;
  const Ring& ring = f.ring();
  const CycScalar delta = ring.delta();
  std::vector<Term> terms;
  for (const auto& [m, c] : f.terms()) {
    std::vector<char> seen(2 * k, 0);
    // Traced points are bottom p >= kk and top k+p with p >= kk; the closure
    // arc joins top k+p to bottom p.
    auto traced = [&](int x) { return x < k ? x >= kk : x - k >= kk; };
    auto across = [&](int x) { return x < k ? x + k : x - k; };
    auto ext = [&](int x) { return x < k ? x : kk + (x - k); };
    std::vector<uint16_t> out(2 * kk);
    for (int x = 0; x < 2 * k; ++x) {
      if (traced(x) || seen[x]) continue;
      int y = m.partner(x);
      seen[x] = 1;
      while (traced(y)) {
        seen[y] = 1;
        int z = across(y);
        seen[z] = 1;
        y = m.partner(z);
      }
      seen[y] = 1;
      out[ext(x)] = static_cast<uint16_t>(ext(y));
      out[ext(y)] = static_cast<uint16_t>(ext(x));
    }
    int loops = 0;
    for (int x = 0; x < 2 * k; ++x) {
      if (seen[x]) continue;
      ++loops;
      int y = x;
      do {
        seen[y] = 1;
        int z = m.partner(y);
        seen[z] = 1;
        y = across(z);
      } while (y != x);
    }
    terms.emplace_back(PlanarMatching::trusted(kk, kk, std::move(out)), c * delta.pow(loops));
  }
  return TLMorphism(ring, kk, kk, std::move(terms));
}

std::vector<CycScalar> annulus_closure(const TLMorphism& f) {
  const int k = f.source();
  if (f.target() != k)
    throw SkeinError(ErrorCode::SignatureMismatch, "annulus closure needs an endomorphism");
  const Ring& ring = f.ring();
  const CycScalar delta = ring.delta();
  std::vector<CycScalar> poly(k + 1, ring.zero());
  for (const auto& [m, c] : f.terms()) {
    std::vector<char> seen(2 * k, 0);
    int core = 0, contractible = 0;
    for (int x = 0; x < 2 * k; ++x) {
      if (seen[x]) continue;
      int winding = 0;
      int y = x;
      do {
        seen[y] = 1;
        int z = m.partner(y);
        seen[z] = 1;
        // Closure arc: top k+p runs around the annulus to bottom p.
        if (z >= k) {
          winding += 1;
          y = z - k;
        } else {
          winding -= 1;
          y = z + k;
        }
      } while (y != x);
      if (winding != 0) ++core;
      else ++contractible;
    }
    poly[core] += c * delta.pow(contractible);
  }
  while (poly.size() > 1 && poly.back().is_zero()) poly.pop_back();
  return poly;
}

// ---------------------------------------------------------------- cabling, reflections

PlanarMatching cable(const PlanarMatching& m, int c) {
  if (c < 1) throw SkeinError(ErrorCode::InvalidArgument, "cable multiplicity must be >= 1");
  if (c == 1) return m;
  const int n = m.size();
  const int k2 = m.bottom() * c, l2 = m.top() * c, n2 = n * c;
  auto pt = [&](int cyc) { return cyc < k2 ? cyc : k2 + (n2 - 1 - cyc); };
  std::vector<uint16_t> out(n2);
  for (int p = 0; p < n; ++p) {
    int a = m.cyclic_position(p), b = m.cyclic_position(m.partner(p));
    if (a > b) continue;
    for (int j = 0; j < c; ++j) {
      int x = pt(a * c + j), y = pt(b * c + c - 1 - j);
      out[x] = static_cast<uint16_t>(y);
      out[y] = static_cast<uint16_t>(x);
    }
  }
  return PlanarMatching::trusted(k2, l2, std::move(out));
}

TLMorphism cable(const TLMorphism& f, int c) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, coeff] : f.terms()) terms.emplace_back(cable(m, c), coeff);
  return TLMorphism(f.ring(), f.source() * c, f.target() * c, std::move(terms));
}

PlanarMatching mirror(const PlanarMatching& m) {
  const int k = m.bottom(), l = m.top();
  auto map = [&](int p) { return p < k ? k - 1 - p : k + (l - 1 - (p - k)); };
  std::vector<uint16_t> out(m.size());
  for (int p = 0; p < m.size(); ++p) out[map(p)] = static_cast<uint16_t>(map(m.partner(p)));
  return PlanarMatching::trusted(k, l, std::move(out));
}

PlanarMatching flip(const PlanarMatching& m) {
  const int k = m.bottom(), l = m.top();
  auto map = [&](int p) { return p < k ? l + p : p - k; };
  std::vector<uint16_t> out(m.size());
  for (int p = 0; p < m.size(); ++p) out[map(p)] = static_cast<uint16_t>(map(m.partner(p)));
  return PlanarMatching::trusted(l, k, std::move(out));
}

TLMorphism mirror(const TLMorphism& f) {
  std::vector<Term> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(mirror(m), c);
  return TLMorphism(f.ring(), f.source(), f.target(), std::move(terms));
}

TLMorphism flip(const TLMorphism& f) {
  std::vector<Term> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(flip(m), c);
  return TLMorphism(f.ring(), f.target(), f.source(), std::move(terms));
}

}  // namespace skein
