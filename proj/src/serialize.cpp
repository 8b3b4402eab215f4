#include "skein/serialize.hpp"

namespace skein {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw SkeinError(ErrorCode::InvalidArgument, "json: " + msg);
}

mpq_class parse_rational(const Json& j) {
  if (!j.is_string()) bad("expected a rational string");
  mpq_class r;
  if (r.set_str(j.get<std::string>(), 10) != 0) bad("bad rational '" + j.get<std::string>() + "'");
  if (r.get_den() == 0) bad("zero denominator");
  r.canonicalize();
  return r;
}

Ring ring_for(int N) {
  if (N < 0) bad("negative N");
  return N == 0 ? Ring::generic() : Ring::root(N);
}

}  // namespace

Json to_json(const CycScalar& s) {
  Json j;
  j["N"] = s.N();
  if (s.is_root()) {
    Json coeffs = Json::array();
    for (const auto& c : s.root_coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = coeffs;
    return j;
  }
  Json num = Json::object();
  for (const auto& [e, c] : s.laurent_numerator()) num[std::to_string(e)] = c.get_str();
  Json den = Json::array();
  for (const auto& c : s.generic_denominator().coeffs()) den.push_back(c.get_str());
  j["num"] = num;
  j["den"] = den;
  return j;
}

Json to_json(const IntPoly& p) {
  Json coeffs = Json::object();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    coeffs[std::to_string(it->first)] = it->second;
  return Json{{"coeffs", coeffs}};
}

Json to_json(const TLMorphism& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json pairing = Json::array();
    for (auto p : m.pairing()) pairing.push_back(p);
    terms.push_back(Json{{"pairing", pairing}, {"coeff", to_json(c)}});
  }
  return Json{{"source", f.source()}, {"target", f.target()}, {"N", f.ring().N()}, {"terms", terms}};
}

Json to_json(const RootContext& ctx) {
  return Json{{"N", ctx.N},
              {"n", ctx.n},
              {"t", ctx.t_sign()},
              {"tHalf", ctx.t_half.to_string()},
              {"q", ctx.q.to_string()},
              {"phi", ctx.ring.field()->phi}};
}

Json to_json(const CheckReport& r, bool timings) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json j{{"name", r.name}, {"params", params}, {"outcome", outcome_name(r.outcome)}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.witness) {
    j["witness"] = to_json(*r.witness);
    j["witness"]["text"] = r.witness->to_string();
  }
  if (timings) j["seconds"] = r.seconds;
  return j;
}

Json to_json(const std::vector<CheckReport>& rs, bool timings) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(to_json(r, timings));
  return out;
}

CycScalar scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("N") || !j["N"].is_number_integer()) bad("scalar needs an integer N");
  Ring ring = ring_for(j["N"].get<int>());
  if (ring.is_root()) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) bad("root scalar needs coeffs");
    std::vector<mpq_class> c;
    for (const auto& x : j["coeffs"]) c.push_back(parse_rational(x));
    return ring.from_root_coeffs(c);
  }
  if (!j.contains("num") || !j["num"].is_object()) bad("generic scalar needs num");
  std::map<int, mpq_class> num;
  for (const auto& [k, v] : j["num"].items()) {
    try {
      num[std::stoi(k)] = parse_rational(v);
    } catch (const std::logic_error&) {
      bad("bad exponent '" + k + "'");
    }
  }
  CycScalar s = ring.laurent(num);
  if (j.contains("den")) {
    if (!j["den"].is_array()) bad("den must be an array");
    std::vector<mpq_class> d;
    for (const auto& x : j["den"]) d.push_back(parse_rational(x));
    std::map<int, mpq_class> den;
    for (size_t i = 0; i < d.size(); ++i) den[static_cast<int>(i)] = d[i];
    CycScalar dd = ring.laurent(den);
    if (dd.is_zero()) bad("zero denominator");
    s = s / dd;
  }
  return s;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object()) bad("polynomial needs coeffs");
  std::map<int, long long> c;
  for (const auto& [k, v] : j["coeffs"].items()) {
    if (!v.is_number_integer()) bad("coefficients must be integers");
    int d;
    try {
      d = std::stoi(k);
    } catch (const std::logic_error&) {
      bad("bad degree '" + k + "'");
    }
    if (d < 0) bad("negative degree");
    c[d] += v.get<long long>();
  }
  return IntPoly(c);
}

TLMorphism morphism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("terms"))
    bad("morphism needs source, target and terms");
  const int k = j["source"].get<int>(), l = j["target"].get<int>();
  if (k < 0 || l < 0 || (k + l) % 2) bad("bad signature");
  int N = j.contains("N") ? j["N"].get<int>() : -1;
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.contains("pairing") || !t.contains("coeff")) bad("term needs pairing and coeff");
    std::vector<uint16_t> p;
    for (const auto& x : t["pairing"]) {
      int v = x.get<int>();
      if (v < 0 || v >= k + l) bad("pairing index out of range");
      p.push_back(static_cast<uint16_t>(v));
    }
    if (static_cast<int>(p.size()) != k + l) bad("pairing has the wrong length");
    CycScalar c = scalar_from_json(t["coeff"]);
    if (N < 0) N = c.N();
    if (c.N() != N) bad("mixed rings");
    terms.emplace_back(PlanarMatching(k, l, p), c);
  }
  return TLMorphism(ring_for(N < 0 ? 0 : N), k, l, std::move(terms));
}

Json coefficient_table(const TLMorphism& f) {
  Json rows = Json::array();
  for (const auto& [m, c] : f.terms())
    rows.push_back(Json{{"matching", m.to_string()}, {"coeff", c.to_string()}});
  return rows;
}

}  // namespace skein
