/*
 * C interface to the catalyxis library.
 *
 * Probability vectors and problems are opaque handles created and destroyed
 * through this API. Every fallible call returns a cx_status; on failure the
 * calling thread's last error message is available from cx_last_error().
 * Strings returned through `char**` out-parameters are owned by the caller
 * and must be released with cx_string_free().
 */
#ifndef CATALYXIS_CATALYXIS_H
#define CATALYXIS_CATALYXIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CX_API __declspec(dllexport)
#else
#define CX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cx_status {
  CX_OK = 0,
  CX_ERR_INVALID_ARGUMENT = 1,
  CX_ERR_PARSE = 2,
  CX_ERR_NEGATIVE_ENTRY = 3,
  CX_ERR_SUM_NOT_ONE = 4,
  CX_ERR_NOT_INCOMPARABLE = 5,
  CX_ERR_INDEX_OUT_OF_RANGE = 6,
  CX_ERR_ZERO_DENOMINATOR = 7,
  CX_ERR_RESOURCE_LIMIT = 8,
  CX_ERR_IO = 9,
  CX_ERR_INTERNAL = 10
} cx_status;

typedef enum cx_order {
  CX_FIRST_MAJORIZED_BY_SECOND = 0,
  CX_SECOND_MAJORIZED_BY_FIRST = 1,
  CX_EQUAL = 2,
  CX_INCOMPARABLE = 3
} cx_order;

typedef enum cx_candidate_verdict {
  CX_NOT_EXCLUDED = 0,
  CX_EXCLUDED_BY_PREFILTER = 1,
  CX_EXCLUDED_BY_STEP_RATIO = 2,
  CX_EXCLUDED_BY_SPAN_RATIO = 3
} cx_candidate_verdict;

typedef struct cx_vec cx_vec;
typedef struct cx_problem cx_problem;

CX_API const char* cx_version(void);
CX_API const char* cx_status_name(cx_status status);
/* Message for the last failed call on this thread; "" if none. */
CX_API const char* cx_last_error(void);
CX_API void cx_string_free(char* s);

/* ---- vectors ----------------------------------------------------------- */

/* Entries are exact decimal or fraction strings ("0.45", "3/11"). */
CX_API cx_status cx_vec_create(const char* const* entries, size_t count, cx_vec** out);
CX_API void cx_vec_free(cx_vec* v);
CX_API size_t cx_vec_size(const cx_vec* v);
/* Zero-based entry of the sorted vector, as an exact string. */
CX_API cx_status cx_vec_entry(const cx_vec* v, size_t index, char** out);
CX_API cx_status cx_tensor(const cx_vec* p, const cx_vec* r, cx_vec** out);

/* ---- majorization ------------------------------------------------------ */

CX_API cx_status cx_compare(const cx_vec* p, const cx_vec* q, cx_order* out);
/* 1-based violation indices; pass indices = NULL to query the count only. */
CX_API cx_status cx_violation_set(const cx_vec* p, const cx_vec* q, size_t* indices,
                                  size_t capacity, size_t* count);
CX_API cx_status cx_majorization_distance(const cx_vec* p, const cx_vec* q, char** out);
CX_API cx_status cx_pmax(const cx_vec* p, const cx_vec* q, char** out);

/* ---- catalysis --------------------------------------------------------- */

CX_API cx_status cx_is_catalyst(const cx_vec* p, const cx_vec* q, const cx_vec* r, int* out);
CX_API cx_status cx_pmax_catalyzed(const cx_vec* p, const cx_vec* q, const cx_vec* r, char** out);
CX_API cx_status cx_delta_catalyzed(const cx_vec* p, const cx_vec* q, const cx_vec* r, char** out);
CX_API cx_status cx_check_candidate(const cx_vec* p, const cx_vec* q, const cx_vec* r,
                                    cx_candidate_verdict* out);
/* a and b as exact strings ("inf" when unbounded). */
CX_API cx_status cx_entanglement_bounds(const cx_vec* p, const cx_vec* q, char** a, char** b,
                                        size_t* m, size_t* n);
CX_API cx_status cx_qubit_window(const cx_vec* p, const cx_vec* q, char** lo, char** hi,
                                 int* empty);
/* *possible = 0 when no catalyst can exist; otherwise *k_min is set. */
CX_API cx_status cx_dimension_lower_bound(const cx_vec* p, const cx_vec* q, int* possible,
                                          size_t* k_min, double* value);

/* ---- problems and documents -------------------------------------------- */

CX_API cx_status cx_problem_parse(const char* text, cx_problem** out);
CX_API cx_status cx_problem_load(const char* path, cx_problem** out);
CX_API void cx_problem_free(cx_problem* problem);
/* Copies of the problem's vectors; *r is NULL when the problem has none. */
CX_API cx_status cx_problem_vectors(const cx_problem* problem, cx_vec** p, cx_vec** q,
                                    cx_vec** r);
CX_API cx_status cx_problem_json(const cx_problem* problem, char** out);

/* JSON documents (two-space indented) and the CSV curve. */
CX_API cx_status cx_report_check(const cx_problem* problem, char** out);
CX_API cx_status cx_report_bounds(const cx_problem* problem, char** out);
CX_API cx_status cx_report_curve_csv(const cx_problem* problem, size_t samples, char** out);
/* precision: decimal or fraction string, e.g. "1e-9". */
CX_API cx_status cx_report_scan(const cx_problem* problem, size_t resolution,
                                const char* precision, char** out);
/* limit = 0 selects the default ceiling. */
CX_API cx_status cx_report_search(const cx_problem* problem, size_t k, size_t resolution,
                                  uint64_t limit, char** out);
CX_API uint64_t cx_default_search_limit(void);

#ifdef __cplusplus
}
#endif

#endif /* CATALYXIS_CATALYXIS_H */
