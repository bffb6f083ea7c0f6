#ifndef QNARAYANA_H
#define QNARAYANA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result codes.
 */
typedef enum QnStatus {
  QN_STATUS_OK = 0,
  /**
   * A check ran and failed.
   */
  QN_STATUS_MISMATCH = 1,
  /**
   * Bad argument: unknown name, out-of-range value, unparsable text.
   */
  QN_STATUS_USAGE = 2,
  QN_STATUS_NULL_POINTER = 3,
  QN_STATUS_INTERNAL = 4,
  QN_STATUS_PANIC = 5,
} QnStatus;

/**
 * Polynomial families indexed by `n`.
 */
typedef enum QnFamily {
  /**
   * `c_n(t)`
   */
  QN_FAMILY_SMALL_C = 0,
  /**
   * `C_n(t)`
   */
  QN_FAMILY_NARAYANA = 1,
  /**
   * `W_n(t)`
   */
  QN_FAMILY_NARAYANA_B = 2,
  /**
   * Catalan number as a constant polynomial.
   */
  QN_FAMILY_CATALAN = 3,
} QnFamily;

/**
 * Opaque polynomial handle.
 */
typedef struct QnPoly QnPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *qn_last_error_message(void);

/**
 * The `n`-th member of `family`, written to `*out`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum QnStatus qn_poly_family(enum QnFamily family, uint32_t n, struct QnPoly **out);

/**
 * Parses canonical text such as `1+2t+4t^2` (variable `t` unless the text
 * names `q`).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for writes.
 */
enum QnStatus qn_poly_parse(const char *text, struct QnPoly **out);

/**
 * Degree of `p`; -1 for the zero polynomial or a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
int64_t qn_poly_degree(const struct QnPoly *p);

/**
 * Coefficient of `var^power` as a decimal string.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum QnStatus qn_poly_coeff(const struct QnPoly *p, size_t power, char **out);

/**
 * Canonical text form, e.g. `1+2t+4t^2+2t^3+t^4`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum QnStatus qn_poly_to_string(const struct QnPoly *p, char **out);

/**
 * JSON form `{"var":"t","coeffs":["1","2",...]}`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum QnStatus qn_poly_to_json(const struct QnPoly *p, char **out);

/**
 * Product of two polynomials in the same variable.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` valid for writes.
 */
enum QnStatus qn_poly_mul(const struct QnPoly *a, const struct QnPoly *b, struct QnPoly **out);

/**
 * Structural equality; false if either handle is null.
 *
 * # Safety
 * `a` and `b` must be null or live handles.
 */
bool qn_poly_equal(const struct QnPoly *a, const struct QnPoly *b);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or a handle not yet freed.
 */
void qn_poly_free(struct QnPoly *p);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void qn_string_free(char *s);

/**
 * Determinant of the `n x n` Hankel matrix `(a_{i+j+shift})` of `family`,
 * `shift` 0 or 1.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum QnStatus qn_hankel_det(enum QnFamily family, uint32_t shift, uint32_t n, struct QnPoly **out);

/**
 * Checks one generating-function identity (`"eq25"`, `"g_at_1"`, ...)
 * through `z^order`. `QN_STATUS_OK` on pass, `QN_STATUS_MISMATCH` on fail.
 *
 * # Safety
 * `name` must be a NUL-terminated string.
 */
enum QnStatus qn_verify_identity(const char *name, uint32_t order);

/**
 * Runs every registered check with default bounds. Either output pointer
 * may be null.
 *
 * # Safety
 * `passed` and `total` must each be null or valid for writes.
 */
enum QnStatus qn_verify_all(uint32_t *passed, uint32_t *total);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QNARAYANA_H */
