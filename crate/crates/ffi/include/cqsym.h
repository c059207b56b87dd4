#ifndef CQSYM_H
#define CQSYM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes. Values 1 to 4 match the exit codes of the command-line tool.
 */
typedef enum CqsStatus {
  CQS_STATUS_OK = 0,
  CQS_STATUS_INVALID_INPUT = 1,
  CQS_STATUS_NOT_SYMMETRIC = 2,
  CQS_STATUS_BUDGET = 3,
  CQS_STATUS_COUNTEREXAMPLE = 4,
  CQS_STATUS_NULL_POINTER = 5,
  CQS_STATUS_PANIC = 6,
} CqsStatus;

/*
 A directed graph on vertices `1..=n`.
 */
typedef struct CqsDigraph CqsDigraph;

/*
 A homogeneous quasisymmetric or symmetric function with coefficients in
 `Q[t]`.
 */
typedef struct CqsPoly CqsPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Builds a digraph from `edge_count` arcs stored as consecutive
 `(tail, head)` pairs in `edges`. Vertices are numbered from 1.

 # Safety
 `edges` must point to `2 * edge_count` readable values (it may be null
 when `edge_count` is 0) and `out` must be writable.
 */
enum CqsStatus cqs_digraph_new(uintptr_t n,
                               const uint32_t *edges,
                               uintptr_t edge_count,
                               struct CqsDigraph **out);

/*
 Parses `{"n": 3, "edges": [[1,2],[2,3]]}`.

 # Safety
 `json` must be a NUL-terminated string and `out` must be writable.
 */
enum CqsStatus cqs_digraph_from_json(const char *json, struct CqsDigraph **out);

/*
 # Safety
 `d` must be null or a handle from this library not yet freed.
 */
void cqs_digraph_free(struct CqsDigraph *d);

/*
 1 for a proper circular arc digraph, 0 otherwise, -1 for a null handle.

 # Safety
 `d` must be null or a live handle.
 */
int cqs_digraph_is_proper_circular_arc(const struct CqsDigraph *d);

/*
 Computes `X` for `d` in `basis` (`"M"`, `"F"`, `"m"`, `"e"`, `"p"`) by
 `method` (`"direct"`, `"f-basis"`, `"p-basis"`, `"series"`). A `budget`
 of 0 selects the default factorial budget.

 # Safety
 `d` must be a live handle, `basis` and `method` NUL-terminated strings,
 and `out` writable.
 */
enum CqsStatus cqs_compute(const struct CqsDigraph *d,
                           const char *basis,
                           const char *method,
                           uintptr_t budget,
                           struct CqsPoly **out);

/*
 # Safety
 `p` must be null or a live handle.
 */
void cqs_poly_free(struct CqsPoly *p);

/*
 The JSON form of `p`; null for a null handle.

 # Safety
 `p` must be null or a live handle.
 */
char *cqs_poly_to_json(const struct CqsPoly *p);

/*
 The one-line rendering of `p`, such as `(3t+3t²)·e[3]`.

 # Safety
 `p` must be null or a live handle.
 */
char *cqs_poly_render(const struct CqsPoly *p);

/*
 Runs a verification suite with default parameters for `max_n` and
 writes the JSON report to `report`. Returns `Counterexample` if the
 suite found a mismatch; the report is written in that case too.

 # Safety
 `suite` must be a NUL-terminated string and `report` writable.
 */
enum CqsStatus cqs_verify(const char *suite, uintptr_t max_n, uintptr_t budget, char **report);

/*
 # Safety
 `s` must be null or a string returned by this library.
 */
void cqs_string_free(char *s);

/*
 Message for the most recent failure on the calling thread; empty after
 a success. Valid until the next library call on the same thread.
 */
const char *cqs_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CQSYM_H */
