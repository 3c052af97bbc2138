#ifndef ACCORDION_TAU_H
#define ACCORDION_TAU_H

#include <stddef.h>
#include <stdint.h>

#if defined(ACCORDION_TAU_BUILDING)
#define AT_API __attribute__((visibility("default")))
#else
#define AT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes. Every function returning at_status leaves a message for
 * at_last_error() on failure. */
typedef enum at_status {
  AT_OK = 0,
  AT_ERR_INVALID_ARGUMENT,
  AT_ERR_ADJACENT_VERTICES,
  AT_ERR_CROSSING_PAIR,
  AT_ERR_DUPLICATE_DIAGONAL,
  AT_ERR_NOT_ACCORDION,
  AT_ERR_NOT_CROSSED,
  AT_ERR_EMPTY_DISSECTION,
  AT_ERR_NOT_NESTED,
  AT_ERR_EMPTY_SUBSET,
  AT_ERR_INFINITE_DIMENSIONAL,
  AT_ERR_BAND_DETECTED,
  AT_ERR_NOT_GENTLE,
  AT_ERR_NON_PURE,
  AT_ERR_ALGEBRA_MISMATCH,
  AT_ERR_LABEL_LENGTH_MISMATCH,
  AT_ERR_SIZE_LIMIT,
  AT_ERR_PARSE,
  AT_ERR_INTERNAL
} at_status;

typedef enum at_format { AT_FORMAT_JSON = 0, AT_FORMAT_DOT, AT_FORMAT_TEXT } at_format;

enum {
  AT_THEOREM_MAIN = 1,
  AT_THEOREM_IDEMPOTENT = 2,
  AT_THEOREM_NESTED = 4,
  AT_THEOREM_ALL = 7
};

typedef struct at_dissection at_dissection;
typedef struct at_quiver at_quiver;
typedef struct at_complex at_complex;
typedef struct at_report at_report;

/* Message of the last failed call on this thread, "" if none. */
AT_API const char* at_last_error(void);
AT_API const char* at_status_name(at_status s);
/* 1 for errors that mean the algebra is outside the supported class. */
AT_API int at_status_is_unsupported_algebra(at_status s);

/* Strings handed out by the library are released with this. */
AT_API void at_string_free(char* s);

/* pairs holds n (u, v) white-vertex labels, 2n ints. */
AT_API at_status at_dissection_create(int m, const int* pairs, size_t n, at_dissection** out);
/* Inline form "0-2,0-3". */
AT_API at_status at_dissection_parse(int m, const char* diagonals, at_dissection** out);
AT_API at_status at_dissection_from_json(const char* text, at_dissection** out);
AT_API at_status at_dissection_to_json(const at_dissection* d, char** out);
AT_API int at_dissection_m(const at_dissection* d);
AT_API size_t at_dissection_size(const at_dissection* d);
AT_API void at_dissection_destroy(at_dissection* d);

AT_API at_status at_quiver_from_json(const char* text, at_quiver** out);
AT_API at_status at_quiver_of_dissection(const at_dissection* d, at_quiver** out);
AT_API at_status at_quiver_to_json(const at_quiver* q, char** out);
/* Basis paths and multiplication table. */
AT_API at_status at_algebra_dump(const at_quiver* q, char** out);
AT_API size_t at_quiver_num_vertices(const at_quiver* q);
AT_API at_status at_quiver_vertex_index(const at_quiver* q, const char* name, int* out);
AT_API void at_quiver_destroy(at_quiver* q);

AT_API at_status at_accordion_complex(const at_dissection* d, at_complex** out);
AT_API at_status at_silting_complex(const at_quiver* q, at_complex** out);
AT_API size_t at_complex_num_vertices(const at_complex* c);
AT_API size_t at_complex_num_facets(const at_complex* c);
AT_API size_t at_complex_num_exchange_edges(const at_complex* c);
/* g-vector of vertex v, written to out[0..at_complex_label_length). */
AT_API size_t at_complex_label_length(const at_complex* c);
AT_API at_status at_complex_gvector(const at_complex* c, size_t v, int* out);
AT_API at_status at_complex_render(const at_complex* c, at_format f, char** out);
AT_API void at_complex_destroy(at_complex* c);

/* seed may be NULL, which skips the randomized direct-sum spot checks. */
AT_API at_status at_verify_dissection(const at_dissection* d, unsigned theorems, const uint64_t* seed,
                                      at_report** out);
/* Idempotent reduction for the vertex subset J, or for every non-empty J
 * when n == 0. */
AT_API at_status at_verify_quiver(const at_quiver* q, const int* subset, size_t n, at_report** out);
AT_API at_status at_verify_exhaustive(int m, unsigned theorems, const uint64_t* seed, at_report** out);
AT_API int at_report_passed(const at_report* r);
AT_API size_t at_report_num_cases(const at_report* r);
AT_API size_t at_report_num_failed(const at_report* r);
/* JSON or text; DOT is rejected. */
AT_API at_status at_report_render(const at_report* r, at_format f, char** out);
AT_API void at_report_destroy(at_report* r);

#ifdef __cplusplus
}
#endif

#endif
