/* C interface to the dihedral crate. Generated by cbindgen; do not edit. */

#ifndef DIHEDRAL_H
#define DIHEDRAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every FFI call.
 */
typedef enum DihedralStatus {
  DIHEDRAL_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  DIHEDRAL_STATUS_NULL_POINTER = 1,
  /**
   * A parameter violated a precondition (bad n, parity mismatch, ...).
   */
  DIHEDRAL_STATUS_INVALID_ARGUMENT = 2,
  /**
   * An oracle enumeration would exceed the tuple budget.
   */
  DIHEDRAL_STATUS_BUDGET_EXCEEDED = 3,
  /**
   * The caller-provided buffer cannot hold the result.
   */
  DIHEDRAL_STATUS_BUFFER_TOO_SMALL = 4,
  /**
   * A row, column, or member index was out of range.
   */
  DIHEDRAL_STATUS_INDEX_OUT_OF_RANGE = 5,
} DihedralStatus;

/**
 * Opaque handle to a complete orthogonal idempotent set.
 */
typedef struct DihedralIdempotents DihedralIdempotents;

/**
 * Opaque handle to a count series.
 */
typedef struct DihedralSeries DihedralSeries;

/**
 * Opaque handle to a character table.
 */
typedef struct DihedralTable DihedralTable;

/**
 * Opaque handle to a verification report.
 */
typedef struct DihedralVerifyReport DihedralVerifyReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *dihedral_version(void);

/**
 * Number of semi-magic squares with line sum `r`, written as a decimal
 * string.
 *
 * # Safety
 * `buf` must point to at least `cap` writable bytes and `written` must be
 * a valid pointer.
 */
enum DihedralStatus dihedral_count(uint32_t n, uint32_t r, char *buf, size_t cap, size_t *written);

/**
 * Brute-force oracle count (deduplicated enumeration), written as a
 * decimal string. Fails with `BUDGET_EXCEEDED` when the enumeration would
 * visit more than `max_tuples` tuples.
 *
 * # Safety
 * Same buffer contract as [`dihedral_count`].
 */
enum DihedralStatus dihedral_oracle_count(uint32_t n,
                                          uint32_t r,
                                          uint64_t max_tuples,
                                          char *buf,
                                          size_t cap,
                                          size_t *written);

/**
 * Builds the count series H(0..=r_max) with its h* vector.
 *
 * # Safety
 * `out` must be a valid pointer; the returned handle must be released with
 * [`dihedral_series_free`].
 */
enum DihedralStatus dihedral_series_new(uint32_t n, uint32_t r_max, struct DihedralSeries **out);

/**
 * Number of stored values (r_max + 1).
 *
 * # Safety
 * `series` must be a live handle and `len` a valid pointer.
 */
enum DihedralStatus dihedral_series_len(const struct DihedralSeries *series, size_t *len);

/**
 * H(r) as a decimal string.
 *
 * # Safety
 * `series` must be a live handle; buffer contract as in [`dihedral_count`].
 */
enum DihedralStatus dihedral_series_value(const struct DihedralSeries *series,
                                          uint32_t r,
                                          char *buf,
                                          size_t cap,
                                          size_t *written);

/**
 * Length of the h* coefficient vector.
 *
 * # Safety
 * `series` must be a live handle and `len` a valid pointer.
 */
enum DihedralStatus dihedral_series_hstar_len(const struct DihedralSeries *series, size_t *len);

/**
 * The i-th h* coefficient as a decimal string.
 *
 * # Safety
 * `series` must be a live handle; buffer contract as in [`dihedral_count`].
 */
enum DihedralStatus dihedral_series_hstar_coeff(const struct DihedralSeries *series,
                                                size_t i,
                                                char *buf,
                                                size_t cap,
                                                size_t *written);

/**
 * Releases a series handle.
 *
 * # Safety
 * `series` must be null or a handle not freed before.
 */
void dihedral_series_free(struct DihedralSeries *series);

/**
 * Builds the character table.
 *
 * # Safety
 * `out` must be valid; release the handle with [`dihedral_table_free`].
 */
enum DihedralStatus dihedral_table_new(uint32_t n, struct DihedralTable **out);

/**
 * Number of conjugacy classes (table columns).
 *
 * # Safety
 * `table` must be a live handle and `count` a valid pointer.
 */
enum DihedralStatus dihedral_table_class_count(const struct DihedralTable *table, size_t *count);

/**
 * Number of rows, including the permutation-character row.
 *
 * # Safety
 * `table` must be a live handle and `count` a valid pointer.
 */
enum DihedralStatus dihedral_table_row_count(const struct DihedralTable *table, size_t *count);

/**
 * Size of the i-th conjugacy class.
 *
 * # Safety
 * `table` must be a live handle and `size` a valid pointer.
 */
enum DihedralStatus dihedral_table_class_size(const struct DihedralTable *table,
                                              size_t class_,
                                              size_t *size);

/**
 * Label of the i-th conjugacy class (e, R^±1, C, ...).
 *
 * # Safety
 * `table` must be a live handle; buffer contract as in [`dihedral_count`].
 */
enum DihedralStatus dihedral_table_class_label(const struct DihedralTable *table,
                                               size_t class_,
                                               char *buf,
                                               size_t cap,
                                               size_t *written);

/**
 * Label of the i-th row (triv, det, pi2(1), ..., rho).
 *
 * # Safety
 * `table` must be a live handle; buffer contract as in [`dihedral_count`].
 */
enum DihedralStatus dihedral_table_row_label(const struct DihedralTable *table,
                                             size_t row,
                                             char *buf,
                                             size_t cap,
                                             size_t *written);

/**
 * Character value at (row, class) as real and imaginary parts.
 *
 * # Safety
 * `table` must be a live handle; `re` and `im` must be valid pointers.
 */
enum DihedralStatus dihedral_table_value(const struct DihedralTable *table,
                                         size_t row,
                                         size_t class_,
                                         double *re,
                                         double *im);

/**
 * Releases a table handle.
 *
 * # Safety
 * `table` must be null or a handle not freed before.
 */
void dihedral_table_free(struct DihedralTable *table);

/**
 * Builds the complete orthogonal idempotent set. `eps <= 0` selects the
 * library default tolerance.
 *
 * # Safety
 * `out` must be valid; release with [`dihedral_idempotents_free`].
 */
enum DihedralStatus dihedral_idempotents_new(uint32_t n,
                                             double eps,
                                             struct DihedralIdempotents **out);

/**
 * Number of idempotents in the set.
 *
 * # Safety
 * `set` must be a live handle and `count` a valid pointer.
 */
enum DihedralStatus dihedral_idempotents_count(const struct DihedralIdempotents *set,
                                               size_t *count);

/**
 * Label of the i-th idempotent (triv, sgn, det*sgn, pi2(j)).
 *
 * # Safety
 * `set` must be a live handle; buffer contract as in [`dihedral_count`].
 */
enum DihedralStatus dihedral_idempotents_label(const struct DihedralIdempotents *set,
                                               size_t member,
                                               char *buf,
                                               size_t cap,
                                               size_t *written);

/**
 * Matrix entry (row, col) of the i-th idempotent.
 *
 * # Safety
 * `set` must be a live handle; `re` and `im` must be valid pointers.
 */
enum DihedralStatus dihedral_idempotents_entry(const struct DihedralIdempotents *set,
                                               size_t member,
                                               size_t row,
                                               size_t col,
                                               double *re,
                                               double *im);

/**
 * Releases an idempotent-set handle.
 *
 * # Safety
 * `set` must be null or a handle not freed before.
 */
void dihedral_idempotents_free(struct DihedralIdempotents *set);

/**
 * Runs the full cross-checking suite. `eps <= 0` selects the default
 * tolerance; oracle sub-checks stay within `max_tuples`.
 *
 * # Safety
 * `out` must be valid; release with [`dihedral_verify_free`].
 */
enum DihedralStatus dihedral_verify_run(uint32_t n,
                                        uint64_t max_tuples,
                                        double eps,
                                        struct DihedralVerifyReport **out);

/**
 * Total number of checks in the report.
 *
 * # Safety
 * `report` must be a live handle and `count` a valid pointer.
 */
enum DihedralStatus dihedral_verify_check_count(const struct DihedralVerifyReport *report,
                                                size_t *count);

/**
 * Number of passed checks.
 *
 * # Safety
 * `report` must be a live handle and `count` a valid pointer.
 */
enum DihedralStatus dihedral_verify_passed_count(const struct DihedralVerifyReport *report,
                                                 size_t *count);

/**
 * Name of the i-th check.
 *
 * # Safety
 * `report` must be a live handle; buffer contract as in [`dihedral_count`].
 */
enum DihedralStatus dihedral_verify_check_name(const struct DihedralVerifyReport *report,
                                               size_t i,
                                               char *buf,
                                               size_t cap,
                                               size_t *written);

/**
 * Whether the i-th check passed (1) or failed (0).
 *
 * # Safety
 * `report` must be a live handle and `passed` a valid pointer.
 */
enum DihedralStatus dihedral_verify_check_passed(const struct DihedralVerifyReport *report,
                                                 size_t i,
                                                 uint8_t *passed);

/**
 * Whether every check passed (1) or not (0).
 *
 * # Safety
 * `report` must be a live handle and `passed` a valid pointer.
 */
enum DihedralStatus dihedral_verify_all_passed(const struct DihedralVerifyReport *report,
                                               uint8_t *passed);

/**
 * Releases a report handle.
 *
 * # Safety
 * `report` must be null or a handle not freed before.
 */
void dihedral_verify_free(struct DihedralVerifyReport *report);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* DIHEDRAL_H */
