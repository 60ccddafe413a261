/* C interface to the lineq toolkit.
 *
 * Every function returns a lineq_status. On failure the message is available
 * from lineq_last_error() on the same thread until the next call. Strings
 * returned through char** outputs are owned by the caller and released with
 * lineq_string_free(). Handles are released with their *_free function;
 * passing NULL to a free function is allowed.
 */
#ifndef LINEQ_H
#define LINEQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LINEQ_API __declspec(dllexport)
#else
#define LINEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lineq_status {
  LINEQ_OK = 0,
  /* malformed document, bad argument value, precondition violated */
  LINEQ_ERR_INPUT = 1,
  /* alphabet budget exceeded */
  LINEQ_ERR_BUDGET = 2,
  /* expansion cap exceeded */
  LINEQ_ERR_CAP = 3,
  /* a required pointer was NULL */
  LINEQ_ERR_NULL = 4,
  LINEQ_ERR_INTERNAL = 5
} lineq_status;

typedef struct lineq_limits {
  uint64_t expansion_cap;
  uint64_t alphabet_budget;
} lineq_limits;

typedef struct lineq_polynomial lineq_polynomial;
typedef struct lineq_encoder lineq_encoder;

typedef enum lineq_level { LINEQ_LEVEL_MATRIX = 0, LINEQ_LEVEL_MORPHISM = 1, LINEQ_LEVEL_BOTH = 2 } lineq_level;

typedef enum lineq_suite {
  /* the defining conditions of an M-triple, applied to (D, g1, g2); passes
   * when exactly (iii) fails, witnessed by c2 g2^2 = c3 */
  LINEQ_SUITE_DEFINITION = 0,
  LINEQ_SUITE_LEMMA5 = 1,
  LINEQ_SUITE_LEMMA6 = 2,
  LINEQ_SUITE_FUNCTORIALITY = 3,
  /* structural invariants of the encoder */
  LINEQ_SUITE_INVARIANTS = 4
} lineq_suite;

typedef struct lineq_report_config {
  uint64_t n_min;
  uint64_t n_max;
  uint64_t s_min;
  uint64_t s_max;
  uint64_t oracle_bound;
  size_t max_len;
  int morphism_level;
} lineq_report_config;

LINEQ_API const char* lineq_version(void);
LINEQ_API const char* lineq_last_error(void);
LINEQ_API const char* lineq_status_name(lineq_status status);
LINEQ_API void lineq_string_free(char* s);
/* 10^6 runs, 32768 letters */
LINEQ_API void lineq_limits_default(lineq_limits* limits);

LINEQ_API lineq_status lineq_polynomial_from_json(const char* json, lineq_polynomial** out);
LINEQ_API lineq_status lineq_polynomial_to_json(const lineq_polynomial* p, char** out);
LINEQ_API void lineq_polynomial_free(lineq_polynomial* p);
LINEQ_API size_t lineq_polynomial_arity(const lineq_polynomial* p);
/* Exact value as a decimal string. */
LINEQ_API lineq_status lineq_polynomial_eval(const lineq_polynomial* p, const uint64_t* point, size_t len,
                                             char** out);

/* limits may be NULL for the defaults. */
LINEQ_API lineq_status lineq_encoder_build(const lineq_polynomial* p, const lineq_polynomial* q,
                                           const lineq_limits* limits, lineq_encoder** out);
LINEQ_API lineq_status lineq_encoder_from_json(const char* json, lineq_encoder** out);
LINEQ_API lineq_status lineq_encoder_to_json(const lineq_encoder* enc, char** out);
LINEQ_API void lineq_encoder_free(lineq_encoder* enc);
LINEQ_API lineq_status lineq_encoder_info(const lineq_encoder* enc, size_t* t, size_t* letters);
/* M1 and M2 as a JSON document of (row, col, value) triplets. */
LINEQ_API lineq_status lineq_encoder_matrices(const lineq_encoder* enc, char** out);

/* M-triple computing p, as a JSON document. */
LINEQ_API lineq_status lineq_mtriple_compile(const lineq_polynomial* p, const lineq_limits* limits, char** out);
/* Runs the M-triple document on a point; *word_level is 1 when no matrix
 * fallback was needed. */
LINEQ_API lineq_status lineq_mtriple_compute(const char* mtriple_json, const uint64_t* point, size_t len,
                                             const lineq_limits* limits, char** out, int* word_level);

/* *found is 1 and *tuple receives a JSON array when p = q has a solution
 * with n3..nt in 1..bound; otherwise *found is 0 and *tuple is NULL. */
LINEQ_API lineq_status lineq_oracle(const lineq_polynomial* p, const lineq_polynomial* q, uint64_t n, uint64_t s,
                                    uint64_t bound, int* found, char** tuple);

/* Bounded search for x (or x, y) with f_ns x = g_ns x (or f_ns x = g_ns y),
 * nonannihilating. *found is 1 when every requested level found a solution.
 * *out receives a JSON document with one result per level. */
LINEQ_API lineq_status lineq_solve(const lineq_encoder* enc, uint64_t n, uint64_t s, size_t max_len, int two_unknowns,
                                   lineq_level level, const lineq_limits* limits, int* found, char** out);

/* bound: ni bound for lemma5, word length for lemma6 and functoriality,
 * ignored otherwise. *passed is 1 when the suite confirms its claim. */
LINEQ_API lineq_status lineq_verify(const lineq_encoder* enc, lineq_suite suite, uint64_t bound,
                                    const lineq_limits* limits, int* passed, char** out);

/* machine != 0 selects the JSON rendering (no timings). */
LINEQ_API lineq_status lineq_report(const lineq_encoder* enc, const lineq_report_config* config,
                                    const lineq_limits* limits, int machine, int* all_agree, char** out);

#ifdef __cplusplus
}
#endif

#endif
