#ifndef SKEIN_C_H
#define SKEIN_C_H

/* C interface to the skein engine. Every call returns a status code
 * (SKEIN_OK on success); skein_last_error() describes the latest failure on
 * the calling thread. Strings returned through char** are owned by the
 * caller and released with skein_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#define SKEIN_API __declspec(dllexport)
#else
#define SKEIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skein_status {
  SKEIN_OK = 0,
  SKEIN_DIVISION_BY_ZERO = 1,
  SKEIN_INEXACT_DIVISION = 2,
  SKEIN_MODE_MISMATCH = 3,
  SKEIN_SIGNATURE_MISMATCH = 4,
  SKEIN_INDEX_OUT_OF_RANGE = 5,
  SKEIN_QUANTUM_INTEGER_VANISHES = 6,
  SKEIN_THICK_JW_NOT_DEFINED = 7,
  SKEIN_BOX_NOT_CONSTRUCTIBLE = 8,
  SKEIN_MALFORMED_WORD = 9,
  SKEIN_NOT_A_CLOSED_COMPONENT = 10,
  SKEIN_DANGLING_GREEN_END = 11,
  SKEIN_SYNTAX_ERROR = 12,
  SKEIN_ELABORATION_ERROR = 13,
  SKEIN_INVALID_ARGUMENT = 14,
  SKEIN_INTERNAL = 99
} skein_status;

typedef struct skein_ring skein_ring;
typedef struct skein_morphism skein_morphism;
typedef struct skein_reports skein_reports;

SKEIN_API const char* skein_last_error(void);
SKEIN_API const char* skein_status_name(int status);
SKEIN_API void skein_string_free(char* s);

/* ---- rings: N = 0 is generic mode */
SKEIN_API int skein_ring_new(int N, skein_ring** out);
SKEIN_API void skein_ring_free(skein_ring* ring);
SKEIN_API int skein_ring_order(const skein_ring* ring);

/* {"N", "n", "t", "tHalf", "q", "phi"} for a root of unity of order N >= 1 */
SKEIN_API int skein_context_json(int N, char** out);

/* ---- morphisms */
SKEIN_API int skein_eval(const skein_ring* ring, const char* source, skein_morphism** out);
SKEIN_API int skein_jw(const skein_ring* ring, int k, skein_morphism** out);
SKEIN_API int skein_morphism_from_json(const char* json, skein_morphism** out);
SKEIN_API void skein_morphism_free(skein_morphism* f);

SKEIN_API int skein_morphism_source(const skein_morphism* f);
SKEIN_API int skein_morphism_target(const skein_morphism* f);
SKEIN_API size_t skein_morphism_size(const skein_morphism* f);

/* g on top of f */
SKEIN_API int skein_compose(const skein_morphism* f, const skein_morphism* g, skein_morphism** out);
SKEIN_API int skein_tensor(const skein_morphism* f, const skein_morphism* g, skein_morphism** out);
SKEIN_API int skein_add(const skein_morphism* f, const skein_morphism* g, skein_morphism** out);
SKEIN_API int skein_equal(const skein_morphism* f, const skein_morphism* g, int* out);

SKEIN_API int skein_morphism_json(const skein_morphism* f, char** out);
SKEIN_API int skein_morphism_text(const skein_morphism* f, char** out);
/* JSON list of {"matching", "coeff"} rows in canonical order */
SKEIN_API int skein_coeff_table(const skein_morphism* f, char** out);

/* ---- verification suite */
typedef struct skein_suite_config {
  const int* roots;
  size_t n_roots;
  int m_max;
  int k_max;
  const char* suite; /* "all" or a family name; NULL means "all" */
  double budget_seconds; /* 0: SKEIN_TIME_BUDGET_SECS or unlimited */
} skein_suite_config;

SKEIN_API void skein_suite_config_default(skein_suite_config* config);
/* JSON list of family names */
SKEIN_API int skein_suite_names(char** out);
SKEIN_API int skein_run_suite(const skein_suite_config* config, skein_reports** out);
SKEIN_API void skein_reports_free(skein_reports* reports);
SKEIN_API size_t skein_reports_count(const skein_reports* reports);
SKEIN_API size_t skein_reports_failed(const skein_reports* reports);
SKEIN_API size_t skein_reports_skipped(const skein_reports* reports);
/* JSON list of check reports; timings only when `timings` is nonzero */
SKEIN_API int skein_reports_json(const skein_reports* reports, int timings, char** out);

#ifdef __cplusplus
}
#endif

#endif
