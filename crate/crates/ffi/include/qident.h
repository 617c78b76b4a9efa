#ifndef QIDENT_H
#define QIDENT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum QidentStatus {
  QIDENT_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  QIDENT_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  QIDENT_STATUS_INVALID_UTF8 = 2,
  /**
   * A string argument could not be parsed.
   */
  QIDENT_STATUS_PARSE = 3,
  /**
   * The inputs are outside the domain of the requested quantity.
   */
  QIDENT_STATUS_DOMAIN = 4,
  /**
   * A q-expansion was requested for a function with a pole at q = 0.
   */
  QIDENT_STATUS_POLE_AT_ZERO = 5,
  /**
   * The result does not fit the output type.
   */
  QIDENT_STATUS_OVERFLOW = 6,
  /**
   * The verification config was rejected.
   */
  QIDENT_STATUS_INVALID_CONFIG = 7,
  /**
   * An internal error; the message is in [`qident_last_error`].
   */
  QIDENT_STATUS_INTERNAL = 8,
} QidentStatus;

/**
 * Opaque handle to an exact rational function in `q`.
 */
typedef struct QidentRatFunc QidentRatFunc;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *qident_last_error(void);

/**
 * The Gaussian binomial `[n, k]` (zero outside `0 <= k <= n`).
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum QidentStatus qident_gaussian(int64_t n, int64_t k, struct QidentRatFunc **out);

/**
 * The q-Pochhammer symbol `(x)_n` with `x` a monomial such as `"q"`, `"-2/3"`
 * or `"5*q^2"`.
 *
 * # Safety
 * `x` must be a nul-terminated string and `out` valid for a pointer write.
 */
enum QidentStatus qident_pochhammer(const char *x, int64_t n, struct QidentRatFunc **out);

/**
 * `h_m(q^k/(1 - z q^k) : k = i..n)` with `z` given as `"p"` or `"p/r"`.
 *
 * # Safety
 * `z` must be a nul-terminated string and `out` valid for a pointer write.
 */
enum QidentStatus qident_hsym(int64_t m,
                              int64_t n,
                              const char *z,
                              int64_t i,
                              struct QidentRatFunc **out);

/**
 * The coefficient `A_i(z)` of the x-polynomial for the given `n`, `m`.
 *
 * # Safety
 * `z` must be a nul-terminated string and `out` valid for a pointer write.
 */
enum QidentStatus qident_a_coeff(const char *z,
                                 int64_t i,
                                 int64_t n,
                                 int64_t m,
                                 struct QidentRatFunc **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `f` must be null or a handle from this library that has not been freed.
 */
void qident_ratfunc_free(struct QidentRatFunc *f);

/**
 * Canonical rendering, `num` alone or `(num) / (den)`.
 *
 * # Safety
 * `f` must be a live handle and `out` valid for a pointer write.
 */
enum QidentStatus qident_ratfunc_to_string(const struct QidentRatFunc *f, char **out);

/**
 * Coefficients of `q^0..q^order` as `"c0, c1, ..."` with each `c` written
 * `p` or `p/r`.
 *
 * # Safety
 * `f` must be a live handle and `out` valid for a pointer write.
 */
enum QidentStatus qident_ratfunc_q_expand(const struct QidentRatFunc *f, size_t order, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library that has not been freed.
 */
void qident_string_free(char *s);

/**
 * The divisor function `sigma_r(n)` for `r` in {0, 1} and `n >= 1`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum QidentStatus qident_sigma(uint32_t r, int64_t n, uint64_t *out);

/**
 * Runs the verification suite described by a TOML config (the same keys as
 * `qident verify --config`) and returns the JSON report. `failures`
 * receives the number of failed checks and may be null.
 *
 * # Safety
 * `config_toml` must be a nul-terminated string, `out_json` valid for a
 * pointer write and `failures` null or valid for a write.
 */
enum QidentStatus qident_verify(const char *config_toml, char **out_json, size_t *failures);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QIDENT_H */
