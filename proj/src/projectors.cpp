#include "skein/projectors.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "skein/chebyshev.hpp"

namespace skein {

namespace {

std::mutex cache_mutex;
std::map<std::pair<int, std::string>, TLMorphism> cache;

template <class Build>
TLMorphism memoized(int N, const std::string& label, Build build) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({N, label});
    if (it != cache.end()) return it->second;
  }
  TLMorphism value = build();
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(std::make_pair(N, label), value).first->second;
}

}  // namespace

void clear_projector_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.clear();
}

void install_projector(int N, const std::string& label, TLMorphism f) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.insert_or_assign({N, label}, std::move(f));
}

TLMorphism jones_wenzl(int k, const Ring& ring) {
  if (k < 0) throw SkeinError(ErrorCode::IndexOutOfRange, "jones_wenzl: negative strand count");
  if (k <= 1) return identity(ring, k);
  return memoized(ring.N(), "jw" + std::to_string(k), [&] {
    CycScalar top = quantum_integer(k, ring);
    if (top.is_zero())
      throw SkeinError(ErrorCode::QuantumIntegerVanishes,
                       "[" + std::to_string(k) + "] = 0 at N = " + std::to_string(ring.N()));
    TLMorphism lower = pad(jones_wenzl(k - 1, ring), 0, 1);
    TLMorphism middle = compose(compose(lower, e_generator(ring, k, k - 2)), lower);
    return lower + middle.scaled(quantum_integer(k - 1, ring) / top);
  });
}

TLMorphism jw_2n_minus_1_term(int k, bool mirrored, const RootContext& ctx) {
  const int n = ctx.n;
  if (k < 0 || k > n - 1)
    throw SkeinError(ErrorCode::IndexOutOfRange, "jw_2n_minus_1_term: k must lie in 0..n-1");
  const Ring& ring = ctx.ring;
  TLMorphism small = jones_wenzl(n - 1, ring);
  if (k == 0) return tensor(tensor(small, identity(ring, 1)), small);
  const int W = 2 * n - 1;
  TLMorphism out = pad(small, n, 0);
  out = compose(out, nested_cap(ring, W, n - k, k));
  out = compose(out, nested_cup(ring, W - 2 * k, n - 1 - k, k));
  out = compose(out, pad(small, 0, n));
  return mirrored ? mirror(out) : out;
}

TLMorphism jw_2n_minus_1(const RootContext& ctx) {
  const int n = ctx.n;
  if (n == 1) return identity(ctx.ring, 1);
  return memoized(ctx.N, "jw2n1", [&] {
    TLMorphism sum = jw_2n_minus_1_term(0, false, ctx);
    for (int k = 1; k < n; ++k) {
      TLMorphism pair = jw_2n_minus_1_term(k, false, ctx) + jw_2n_minus_1_term(k, true, ctx);
      sum = k % 2 ? sum - pair : sum + pair;
    }
    return sum;
  });
}

mpq_class thick_quantum_integer(int j, const RootContext& ctx) {
  return quantum_integer_at_sign(j, ctx.t_sign());
}

TLMorphism thick_jw(int k, const RootContext& ctx) {
  if (k < 0) throw SkeinError(ErrorCode::IndexOutOfRange, "thick_jw: negative strand count");
  return memoized(ctx.N, "tjw" + std::to_string(k), [&] {
    for (int j = 2; j <= k; ++j)
      if (thick_quantum_integer(j, ctx) == 0)
        throw SkeinError(ErrorCode::ThickJWNotDefined,
                         "[" + std::to_string(j) + "] vanishes at q = t");
    // The generic coefficients are functions of q, so substituting v -> t^{1/2}
    // lands in Q(zeta_N).
    TLMorphism generic = jones_wenzl(k, Ring::generic());
    TLMorphism at_t = generic.map_coefficients(ctx.ring, [&](const CycScalar& c) {
      try {
        return c.evaluate_at(ctx.t_half);
      } catch (const SkeinError&) {
        throw SkeinError(ErrorCode::ThickJWNotDefined, "coefficient has a pole at q = t");
      }
    });
    return cable(at_t, ctx.n);
  });
}

TLMorphism jw_hat(int k, const RootContext& ctx) {
  if (k < 0) throw SkeinError(ErrorCode::IndexOutOfRange, "jw_hat: k must be >= 0");
  const int n = ctx.n;
  if (k == 0) return jones_wenzl(n - 1, ctx.ring);
  if (k == 1) return jw_2n_minus_1(ctx);
  return memoized(ctx.N, "jwhat" + std::to_string(k), [&] {
    // Built from the middle outward so that each product has one side small.
    TLMorphism below = pad(jw_hat(k - 1, ctx), 0, n);
    TLMorphism middle = compose(compose(below, pad(thick_jw(k, ctx), n - 1, 0)), below);
    TLMorphism outer = pad(jw_2n_minus_1(ctx), (k - 1) * n, 0);
    return compose(compose(outer, middle), outer);
  });
}

TLMorphism jw_dispatch(int k, const Ring& ring) {
  if (!ring.is_root()) return jones_wenzl(k, ring);
  RootContext ctx = derive_root_context(ring.N());
  const int n = ctx.n;
  if (n == 1 || k <= n - 1) return jones_wenzl(k, ring);
  if (k >= 2 * n - 1 && (k - (n - 1)) % n == 0) return jw_hat((k - (n - 1)) / n, ctx);
  throw SkeinError(ErrorCode::BoxNotConstructible,
                   "no projector on " + std::to_string(k) + " strands: [" + std::to_string(n) +
                       "] = 0 at N = " + std::to_string(ring.N()) +
                       " and k is not of the form n-1+jn");
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  os << "identity coefficient " << (identity_coefficient_is_one ? "is 1" : "is not 1");
  if (uncappable) {
    os << ", killed by every cap";
  } else {
    os << ", survives caps at";
    for (auto [side, i] : cappable_at) os << " " << (side ? "top:" : "bottom:") << i;
  }
  return os.str();
}

AxiomReport verify_jw_axioms(const TLMorphism& f) {
  AxiomReport r;
  if (f.source() != f.target())
    throw SkeinError(ErrorCode::SignatureMismatch, "verify_jw_axioms: not an endomorphism");
  const int k = f.source();
  const Ring& ring = f.ring();
  r.identity_coefficient_is_one = f.identity_coefficient().is_one();
  for (int i = 0; i + 1 < k; ++i) {
    if (!compose(cup(ring, k, i), f).is_zero()) r.cappable_at.emplace_back(0, i);
    if (!compose(f, cap(ring, k, i)).is_zero()) r.cappable_at.emplace_back(1, i);
  }
  r.uncappable = r.cappable_at.empty();
  return r;
}

}  // namespace skein
