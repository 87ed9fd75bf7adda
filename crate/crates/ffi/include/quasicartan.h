/* C interface to the quasicartan matrix classification library. */

#ifndef QUASICARTAN_H
#define QUASICARTAN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of a fallible call.
 */
typedef enum QcStatus {
  /**
   * The call succeeded.
   */
  QcStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  QcStatus_NullPointer = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  QcStatus_InvalidUtf8 = 2,
  /**
   * The matrix text/JSON could not be parsed.
   */
  QcStatus_ParseError = 3,
  /**
   * An index was outside the matrix.
   */
  QcStatus_OutOfRange = 4,
  /**
   * An entry does not fit the requested machine type.
   */
  QcStatus_Overflow = 5,
  /**
   * Positivity was asked of a matrix that is not symmetric by signs.
   */
  QcStatus_NotSymmetricBySigns = 6,
  /**
   * A companion was asked of a matrix that is not skew-symmetrizable.
   */
  QcStatus_NotSkewSymmetrizable = 7,
  /**
   * The companion search hit its assignment budget before deciding.
   */
  QcStatus_CapExceeded = 8,
  /**
   * Two matrices of different dimensions were combined.
   */
  QcStatus_DimensionMismatch = 9,
  /**
   * An internal invariant failed; this is a bug in the library.
   */
  QcStatus_InternalError = 10,
} QcStatus;

/**
 * Opaque handle to a square integer matrix.
 */
typedef struct QcMatrix QcMatrix;

/**
 * Options for the companion search; see `qc_companion_options_default`.
 */
typedef struct QcCompanionOptions {
  /**
   * Apply the pair/triple product bounds as pruning rules.
   */
  bool prune;
  /**
   * Use the small-dimension, dense and per-component shortcuts.
   */
  bool fast_paths;
  /**
   * Maximum number of sign assignments to enumerate before giving up.
   */
  uint64_t cap;
} QcCompanionOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null after a
 * success. The pointer is owned by the library and valid until the next
 * `qc_*` call on the same thread.
 */
const char *qc_last_error_message(void);

/**
 * Default companion search options: pruning and fast paths on, cap 2^24.
 */
struct QcCompanionOptions qc_companion_options_default(void);

/**
 * Parses a matrix from its text or JSON form (auto-detected).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum QcStatus qc_matrix_parse(const char *text, struct QcMatrix **out);

/**
 * Builds an `n` x `n` matrix from a row-major buffer of `n * n` entries.
 *
 * # Safety
 * `entries` must point to `n * n` readable values and `out` must be valid.
 */
enum QcStatus qc_matrix_from_i64(size_t n, const int64_t *entries, struct QcMatrix **out);

/**
 * Releases a matrix handle. Null is ignored.
 *
 * # Safety
 * `m` must have been returned by this library and not freed before.
 */
void qc_matrix_free(struct QcMatrix *m);

/**
 * Releases a string returned through a `char **` out parameter. Null is
 * ignored.
 *
 * # Safety
 * `s` must have been returned by this library and not freed before.
 */
void qc_string_free(char *s);

/**
 * Dimension of a matrix; 0 for a null handle.
 *
 * # Safety
 * `m` must be a live handle or null.
 */
size_t qc_matrix_dim(const struct QcMatrix *m);

/**
 * Reads one entry as an `i64`; fails with `Overflow` if it does not fit.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum QcStatus qc_matrix_entry_i64(const struct QcMatrix *m, size_t i, size_t j, int64_t *out);

/**
 * Renders a matrix in the canonical text format.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum QcStatus qc_matrix_to_text(const struct QcMatrix *m, char **out);

/**
 * Renders a matrix as `{"n": ..., "rows": [[...]]}`.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum QcStatus qc_matrix_to_json(const struct QcMatrix *m, char **out);

/**
 * True iff every off-diagonal pair is both zero or has positive product.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum QcStatus qc_is_symmetric_by_signs(const struct QcMatrix *m, bool *out);

/**
 * True iff the diagonal is zero and off-diagonal pairs have negative product.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum QcStatus qc_is_skew_symmetric_by_signs(const struct QcMatrix *m, bool *out);

/**
 * Decides symmetrizability. On a yes verdict and a non-null `witness_json`,
 * stores the symmetrizer as JSON (caller frees); stores null otherwise.
 *
 * # Safety
 * `m` must be a live handle, `verdict` valid, `witness_json` valid or null.
 */
enum QcStatus qc_check_symmetrizable(const struct QcMatrix *m, bool *verdict, char **witness_json);

/**
 * Skew analogue of `qc_check_symmetrizable`.
 *
 * # Safety
 * `m` must be a live handle, `verdict` valid, `witness_json` valid or null.
 */
enum QcStatus qc_check_skew_symmetrizable(const struct QcMatrix *m,
                                          bool *verdict,
                                          char **witness_json);

/**
 * Constructs a symmetrizer for a matrix promised symmetrizable and stores it
 * as JSON. Garbage in, garbage out: no validation is performed. With
 * `normalize`, the result is rescaled to minimal positive integers per
 * connected component.
 *
 * # Safety
 * `m` must be a live handle and `out_json` a valid pointer.
 */
enum QcStatus qc_find_symmetrizer(const struct QcMatrix *m, bool normalize, char **out_json);

/**
 * Decides positivity of a symmetrizable matrix by leading principal minors.
 * Fails with `NotSymmetricBySigns` when the criterion does not apply. On
 * success stores the verdict and, if `report_json` is non-null, the full
 * verdict JSON.
 *
 * # Safety
 * `m` must be a live handle, `verdict` valid, `report_json` valid or null.
 */
enum QcStatus qc_is_positive(const struct QcMatrix *m, bool *verdict, char **report_json);

/**
 * Builds the canonical companion candidate `C+` of a matrix.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum QcStatus qc_c_plus(const struct QcMatrix *m, struct QcMatrix **out);

/**
 * Searches for a positive quasi-Cartan companion. `options` may be null for
 * defaults. Stores the search summary as JSON in `result_json` (if non-null)
 * and, when a companion was found and `companion` is non-null, a new matrix
 * handle for it (null when none exists).
 *
 * Fails with `NotSkewSymmetrizable` for invalid input and `CapExceeded` when
 * the budget ran out before a decision.
 *
 * # Safety
 * `m` must be a live handle; `options`, `companion` and `result_json` must
 * each be valid or null.
 */
enum QcStatus qc_find_positive_companion(const struct QcMatrix *m,
                                         const struct QcCompanionOptions *options,
                                         struct QcMatrix **companion,
                                         char **result_json);

/**
 * Certificate check: is `c` a positive quasi-Cartan companion of `b`?
 *
 * # Safety
 * `b` and `c` must be live handles and `out` a valid pointer.
 */
enum QcStatus qc_verify_companion(const struct QcMatrix *b, const struct QcMatrix *c, bool *out);

/**
 * Runs the full classification and stores the report as JSON. `options` may
 * be null for defaults; `integer_symmetrizer` rescales witnesses to minimal
 * positive integers.
 *
 * # Safety
 * `m` must be a live handle, `out_json` valid, `options` valid or null.
 */
enum QcStatus qc_classify(const struct QcMatrix *m,
                          const struct QcCompanionOptions *options,
                          bool integer_symmetrizer,
                          char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* QUASICARTAN_H */
