#ifndef POSMAT_H
#define POSMAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define POSMAT_API __attribute__((visibility("default")))
#else
#define POSMAT_API
#endif

/* Status codes. Nonzero values match the core's error codes. */
enum {
  POSMAT_OK = 0,
  POSMAT_E_INVALID_ARGUMENT = 1,
  POSMAT_E_DIMENSION_MISMATCH = 2,
  POSMAT_E_EMPTY_INDEX_SET = 3,
  POSMAT_E_OUT_OF_RANGE = 4,
  POSMAT_E_NEGATIVE_ENTRY = 5,
  POSMAT_E_NOT_STOCHASTIC = 6,
  POSMAT_E_PARSE = 7,
  POSMAT_E_PRECONDITION = 8,
  POSMAT_E_CAP_EXCEEDED = 9,
  POSMAT_E_NOT_IRREDUCIBLE = 10,
  POSMAT_E_NOT_PRIMITIVE = 11,
  POSMAT_E_REJECTION_BUDGET = 12,
  POSMAT_E_IO = 13,
  POSMAT_E_INTERNAL = 14
};

typedef struct posmat_matrix posmat_matrix;
typedef struct posmat_graph posmat_graph;

/* Message for the last failing call on this thread; "" if none. */
POSMAT_API const char* posmat_last_error(void);
POSMAT_API const char* posmat_status_name(int status);
POSMAT_API const char* posmat_version(void);
/* Frees any char* returned through an out parameter. */
POSMAT_API void posmat_string_free(char* s);

/* Raises every enumeration cap to n for the whole process; 0 restores the
   defaults (or POSMAT_MAX_N when set). */
POSMAT_API int posmat_set_max_n(int n);

/* ---- matrices */

/* as_pattern: read a grid of '*' and '0' instead of the numeric format. */
POSMAT_API int posmat_matrix_parse(const char* text, int as_pattern, posmat_matrix** out);
POSMAT_API int posmat_matrix_load(const char* path, int as_pattern, posmat_matrix** out);
POSMAT_API int posmat_matrix_emit(const posmat_matrix* m, int as_pattern, char** out);
POSMAT_API int posmat_matrix_json(const posmat_matrix* m, char** out);
POSMAT_API void posmat_matrix_free(posmat_matrix* m);
POSMAT_API size_t posmat_matrix_rows(const posmat_matrix* m);
POSMAT_API size_t posmat_matrix_cols(const posmat_matrix* m);

POSMAT_API int posmat_generate_wielandt(int n, posmat_matrix** out);
POSMAT_API int posmat_generate_periodic_block(const int* sizes, size_t count, posmat_matrix** out);
/* kind: nonneg|stochastic|pattern. filter: none|irreducible|primitive|
   scrambling|sarymsakov|fully-indecomposable|gk. density: rational text. */
POSMAT_API int posmat_generate_random(const char* kind, int rows, int cols, const char* density,
                                      const char* filter, int k, uint64_t seed, posmat_matrix** out);
/* Exactly one of *matrix / *graph is set, depending on the fixture. */
POSMAT_API int posmat_fixture(const char* id, posmat_matrix** matrix, posmat_graph** graph);
POSMAT_API int posmat_fixture_list_json(char** out);
/* Re-evaluates every stated fact of every fixture. *all_hold is 1 or 0. */
POSMAT_API int posmat_fixture_check_json(int* all_hold, char** out);

/* ---- analyses; reports are JSON strings */

POSMAT_API int posmat_classify_json(const posmat_matrix* m, int certificates, char** out);
POSMAT_API int posmat_gk_json(const posmat_matrix* m, int k, int* is_gk, char** out);
POSMAT_API int posmat_gk_index(const posmat_matrix* m, int* out);
POSMAT_API int posmat_gamma(const posmat_matrix* m, int* out);
/* k <= 0 picks the largest k the matrix supports. */
POSMAT_API int posmat_bounds_json(const posmat_matrix* m, int k, char** out);

typedef struct {
  int k;             /* g_k parameter where a theorem has one */
  int n;             /* order, for the Wielandt check */
  int m_block;       /* leading block size */
  const char* w;     /* index set such as "{1,3}"; NULL for the power form */
  const char* variant; /* "head" or "tail"; NULL means head */
} posmat_verify_args;

/* *verdict: 0 conclusion holds, 1 violated, 2 hypotheses not met. */
POSMAT_API int posmat_verify_json(const char* theorem, const posmat_matrix* const* factors, size_t count,
                                  const posmat_verify_args* args, int* verdict, char** out);
/* *violations counts hypothesis-satisfying trials whose conclusion failed. */
POSMAT_API int posmat_verify_random_json(const char* theorem, long trials, int n_lo, int n_hi, uint64_t seed,
                                         long* violations, char** out);
/* tolerance: rational text; *converged is 1 or 0. */
POSMAT_API int posmat_limit_json(const posmat_matrix* m, const char* tolerance, long max_iter, int* converged,
                                 char** out);

/* ---- graphs */

POSMAT_API int posmat_graph_parse(const char* text, posmat_graph** out);
POSMAT_API int posmat_graph_load(const char* path, posmat_graph** out);
POSMAT_API int posmat_graph_emit(const posmat_graph* g, char** out);
POSMAT_API int posmat_graph_json(const posmat_graph* g, char** out);
POSMAT_API void posmat_graph_free(posmat_graph* g);
POSMAT_API size_t posmat_graph_order(const posmat_graph* g);

POSMAT_API int posmat_graph_kappa_json(const posmat_graph* g, int* kappa, char** out);
POSMAT_API int posmat_graph_check_k_json(const posmat_graph* g, int k, int* connected, char** out);
/* k <= 0 audits every k in 1..n-1. *agree is 1 when all conditions agree. */
POSMAT_API int posmat_graph_audit_json(const posmat_graph* g, int k, int* agree, char** out);

#ifdef __cplusplus
}
#endif

#endif
