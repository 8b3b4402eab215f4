#include "skein/skein_c.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "skein/evaluate.hpp"
#include "skein/projectors.hpp"
#include "skein/serialize.hpp"

struct skein_ring {
  skein::Ring ring;
};

struct skein_morphism {
  skein::TLMorphism value;
};

struct skein_reports {
  std::vector<skein::CheckReport> items;
};

namespace {

thread_local std::string last_error;

int fail(int status, const std::string& msg) {
  last_error = msg;
  return status;
}

template <class F>
int guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SKEIN_OK;
  } catch (const skein::SkeinError& e) {
    return fail(static_cast<int>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(SKEIN_INVALID_ARGUMENT, std::string("json: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(SKEIN_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SKEIN_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define SKEIN_REQUIRE(cond)                                               \
  do {                                                                    \
    if (!(cond)) return fail(SKEIN_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* skein_last_error(void) { return last_error.c_str(); }

const char* skein_status_name(int status) { return skein::error_code_name(static_cast<skein::ErrorCode>(status)); }

void skein_string_free(char* s) { std::free(s); }

int skein_ring_new(int N, skein_ring** out) {
  SKEIN_REQUIRE(out);
  if (N < 0) return fail(SKEIN_INVALID_ARGUMENT, "ring order must be >= 0");
  return guarded([&] { *out = new skein_ring{N == 0 ? skein::Ring::generic() : skein::Ring::root(N)}; });
}

void skein_ring_free(skein_ring* ring) { delete ring; }

int skein_ring_order(const skein_ring* ring) { return ring ? ring->ring.N() : -1; }

int skein_context_json(int N, char** out) {
  SKEIN_REQUIRE(out);
  if (N < 1) return fail(SKEIN_INVALID_ARGUMENT, "root order must be >= 1");
  return guarded([&] { *out = copy_string(skein::to_json(skein::derive_root_context(N)).dump()); });
}

int skein_eval(const skein_ring* ring, const char* source, skein_morphism** out) {
  SKEIN_REQUIRE(ring && source && out);
  return guarded([&] { *out = new skein_morphism{skein::evaluate_source(source, ring->ring)}; });
}

int skein_jw(const skein_ring* ring, int k, skein_morphism** out) {
  SKEIN_REQUIRE(ring && out);
  if (k < 0) return fail(SKEIN_INVALID_ARGUMENT, "k must be >= 0");
  return guarded([&] { *out = new skein_morphism{skein::jw_dispatch(k, ring->ring)}; });
}

int skein_morphism_from_json(const char* json, skein_morphism** out) {
  SKEIN_REQUIRE(json && out);
  return guarded([&] { *out = new skein_morphism{skein::morphism_from_json(skein::Json::parse(json))}; });
}

void skein_morphism_free(skein_morphism* f) { delete f; }

int skein_morphism_source(const skein_morphism* f) { return f ? f->value.source() : -1; }
int skein_morphism_target(const skein_morphism* f) { return f ? f->value.target() : -1; }
size_t skein_morphism_size(const skein_morphism* f) { return f ? f->value.size() : 0; }

int skein_compose(const skein_morphism* f, const skein_morphism* g, skein_morphism** out) {
  SKEIN_REQUIRE(f && g && out);
  return guarded([&] { *out = new skein_morphism{skein::compose(f->value, g->value)}; });
}

int skein_tensor(const skein_morphism* f, const skein_morphism* g, skein_morphism** out) {
  SKEIN_REQUIRE(f && g && out);
  return guarded([&] { *out = new skein_morphism{skein::tensor(f->value, g->value)}; });
}

int skein_add(const skein_morphism* f, const skein_morphism* g, skein_morphism** out) {
  SKEIN_REQUIRE(f && g && out);
  return guarded([&] { *out = new skein_morphism{f->value + g->value}; });
}

int skein_equal(const skein_morphism* f, const skein_morphism* g, int* out) {
  SKEIN_REQUIRE(f && g && out);
  return guarded([&] { *out = f->value == g->value ? 1 : 0; });
}

int skein_morphism_json(const skein_morphism* f, char** out) {
  SKEIN_REQUIRE(f && out);
  return guarded([&] { *out = copy_string(skein::to_json(f->value).dump()); });
}

int skein_morphism_text(const skein_morphism* f, char** out) {
  SKEIN_REQUIRE(f && out);
  return guarded([&] { *out = copy_string(f->value.to_string()); });
}

int skein_coeff_table(const skein_morphism* f, char** out) {
  SKEIN_REQUIRE(f && out);
  return guarded([&] { *out = copy_string(skein::coefficient_table(f->value).dump()); });
}

void skein_suite_config_default(skein_suite_config* config) {
  if (!config) return;
  static const int default_roots[] = {8};
  skein::SuiteConfig d;
  config->roots = default_roots;
  config->n_roots = 1;
  config->m_max = d.m_max;
  config->k_max = d.k_max;
  config->suite = nullptr;
  config->budget_seconds = d.budget_seconds;
}

int skein_suite_names(char** out) {
  SKEIN_REQUIRE(out);
  return guarded([&] { *out = copy_string(skein::Json(skein::suite_names()).dump()); });
}

int skein_run_suite(const skein_suite_config* config, skein_reports** out) {
  SKEIN_REQUIRE(config && out);
  SKEIN_REQUIRE(config->roots || config->n_roots == 0);
  return guarded([&] {
    skein::SuiteConfig c;
    c.roots.assign(config->roots, config->roots + config->n_roots);
    c.m_max = config->m_max;
    c.k_max = config->k_max;
    c.suite = config->suite ? config->suite : "all";
    c.budget_seconds = config->budget_seconds;
    *out = new skein_reports{skein::run_suite(c)};
  });
}

void skein_reports_free(skein_reports* reports) { delete reports; }

size_t skein_reports_count(const skein_reports* reports) { return reports ? reports->items.size() : 0; }

size_t skein_reports_failed(const skein_reports* reports) {
  size_t n = 0;
  if (reports)
    for (const auto& r : reports->items) n += r.outcome == skein::Outcome::Fail;
  return n;
}

size_t skein_reports_skipped(const skein_reports* reports) {
  size_t n = 0;
  if (reports)
    for (const auto& r : reports->items) n += r.outcome == skein::Outcome::Skipped;
  return n;
}

int skein_reports_json(const skein_reports* reports, int timings, char** out) {
  SKEIN_REQUIRE(reports && out);
  return guarded([&] { *out = copy_string(skein::to_json(reports->items, timings != 0).dump()); });
}

}  // extern "C"
