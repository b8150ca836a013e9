#ifndef SCHUBERT_H
#define SCHUBERT_H

/* Generated by cbindgen from crates/ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SchubertOrder {
  SCHUBERT_ORDER_ANTIDIAG = 0,
  SCHUBERT_ORDER_ANTIDIAG_TRANSPOSE = 1,
} SchubertOrder;

typedef enum SchubertStatus {
  SCHUBERT_STATUS_OK = 0,
  SCHUBERT_STATUS_NULL_POINTER = 1,
  SCHUBERT_STATUS_INVALID_UTF8 = 2,
  SCHUBERT_STATUS_INVALID_INPUT = 3,
  SCHUBERT_STATUS_NOT_BINOMIAL = 4,
  SCHUBERT_STATUS_CAP_EXCEEDED = 5,
  SCHUBERT_STATUS_OUT_OF_RANGE = 6,
  SCHUBERT_STATUS_PANIC = 7,
} SchubertStatus;

/**
 * Opaque Gröbner basis handle; members are in the basis order.
 */
typedef struct SchubertBasis SchubertBasis;

/**
 * Opaque permutation handle.
 */
typedef struct SchubertPerm SchubertPerm;

typedef struct SchubertClassification {
  bool vexillary;
  bool binomial;
  bool binomial_ideal;
  bool gao_yong_reduced;
  /**
   * -1 when the essential set is empty.
   */
  int64_t max_essential_rank;
} SchubertClassification;

typedef struct SchubertShapeRegularity {
  size_t rrw;
  size_t ads;
  /**
   * Set when the ads value comes from a witness rather than exhaustive
   * search.
   */
  bool lower_bound_certified;
} SchubertShapeRegularity;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * owned by the library and valid until the next failing call on the same
 * thread.
 */
const char *schubert_last_error(void);

/**
 * Releases a string returned by the library.
 *
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void schubert_string_free(char *s);

/**
 * Parses a one-line word such as `"31425"` or `"3,1,4,2,5"`.
 *
 * # Safety
 * `text` is a nul-terminated string; `out` is valid for writes.
 */
enum SchubertStatus schubert_perm_parse(const char *text, struct SchubertPerm **out);

/**
 * # Safety
 * `perm` is null or a handle from [`schubert_perm_parse`] not yet freed.
 */
void schubert_perm_free(struct SchubertPerm *perm);

/**
 * Size `n` of the permutation, or 0 for a null handle.
 *
 * # Safety
 * `perm` is null or a live handle.
 */
size_t schubert_perm_size(const struct SchubertPerm *perm);

/**
 * # Safety
 * `perm` is a live handle; `out` is valid for writes.
 */
enum SchubertStatus schubert_classify(const struct SchubertPerm *perm,
                                      struct SchubertClassification *out);

/**
 * Reduced Gröbner basis of the Schubert determinantal ideal.
 *
 * # Safety
 * `perm` is a live handle; `out` is valid for writes.
 */
enum SchubertStatus schubert_reduced_basis(const struct SchubertPerm *perm,
                                           enum SchubertOrder term_order,
                                           struct SchubertBasis **out);

/**
 * # Safety
 * `basis` is null or a handle from [`schubert_reduced_basis`] not yet freed.
 */
void schubert_basis_free(struct SchubertBasis *basis);

/**
 * Number of members, or 0 for a null handle.
 *
 * # Safety
 * `basis` is null or a live handle.
 */
size_t schubert_basis_len(const struct SchubertBasis *basis);

/**
 * Degree and number of terms of member `index`.
 *
 * # Safety
 * `basis` is a live handle; `degree` and `num_terms` are valid for writes.
 */
enum SchubertStatus schubert_basis_member_shape(const struct SchubertBasis *basis,
                                                size_t index,
                                                uint32_t *degree,
                                                size_t *num_terms);

/**
 * Member `index` as text, terms in descending order. Free the result with
 * [`schubert_string_free`].
 *
 * # Safety
 * `basis` is a live handle; `out` is valid for writes.
 */
enum SchubertStatus schubert_basis_member_text(const struct SchubertBasis *basis,
                                               size_t index,
                                               char **out);

/**
 * Regularity of a dominant part of shape `partition` (e.g. `"6,4,1,1,1"`)
 * by the canonical antidiagonal and by recession connectivity.
 *
 * # Safety
 * `partition` is a nul-terminated string; `out` is valid for writes.
 */
enum SchubertStatus schubert_shape_regularity(const char *partition,
                                              size_t edge_cap,
                                              struct SchubertShapeRegularity *out);

/**
 * Regularity of a binomial Schubert determinantal ideal as a sum over its
 * parts.
 *
 * # Safety
 * `perm` is a live handle; `out` is valid for writes.
 */
enum SchubertStatus schubert_regularity(const struct SchubertPerm *perm, size_t *out);

/**
 * The full JSON report for a permutation. Free the result with
 * [`schubert_string_free`].
 *
 * # Safety
 * `perm` is a live handle; `out` is valid for writes.
 */
enum SchubertStatus schubert_report_json(const struct SchubertPerm *perm,
                                         enum SchubertOrder term_order,
                                         char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHUBERT_H */
