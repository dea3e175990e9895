#ifndef PICARD0N_H
#define PICARD0N_H

/* Generated by cbindgen from picard0n-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
enum P0nStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  P0N_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  P0N_STATUS_NULL_ARGUMENT = 1,
  /**
   * The inputs violate a precondition; see `p0n_last_error`.
   */
  P0N_STATUS_INVALID_ARGUMENT = 2,
  /**
   * An output buffer is too small; the required size was reported.
   */
  P0N_STATUS_BUFFER_TOO_SMALL = 3,
};
#ifndef __cplusplus
typedef int32_t P0nStatus;
#endif // __cplusplus

/**
 * Opaque handle to the non-adjacent basis of a cyclic ordering.
 */
typedef struct P0nBasis P0nBasis;

/**
 * Opaque handle to a cyclic ordering of the labels `1..=n`.
 */
typedef struct P0nOrder P0nOrder;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the most recent error message (NUL-terminated) into `buf` and
 * returns the message length excluding the terminator. With a null or
 * too-small buffer nothing is copied; call again with the returned
 * length plus one.
 */
size_t p0n_last_error(char *buf, size_t cap);

/**
 * Number of boundary divisors, `2^(n-1) - 1 - n`.
 */
P0nStatus p0n_num_divisors(uint32_t n, uint64_t *out);

/**
 * Basis dimension, `2^(n-1) - 1 - n(n-1)/2`.
 */
P0nStatus p0n_dimension(uint32_t n, uint64_t *out);

/**
 * Creates the standard order `(1, ..., n)`. Free with [`p0n_order_free`].
 */
P0nStatus p0n_order_standard(uint32_t n, struct P0nOrder **out);

/**
 * Creates an order from an arrangement (any rotation of it denotes the
 * same order). Free with [`p0n_order_free`].
 */
P0nStatus p0n_order_new(const uint32_t *labels, size_t len, struct P0nOrder **out);

void p0n_order_free(struct P0nOrder *order);

/**
 * Number of marked points, or 0 for a null handle.
 */
uint32_t p0n_order_points(const struct P0nOrder *order);

/**
 * Copies the canonical arrangement (starting with label 1) into `out`.
 */
P0nStatus p0n_order_arrangement(const struct P0nOrder *order,
                                uint32_t *out,
                                size_t cap,
                                size_t *written);

/**
 * Canonical representative of the divisor `{A, complement(A)}`: the
 * smaller side, ties broken toward the side containing label 1.
 */
P0nStatus p0n_canonical_rep(uint32_t n,
                            const uint32_t *labels,
                            size_t len,
                            uint32_t *out,
                            size_t cap,
                            size_t *written);

/**
 * Block count `k` of the divisor for the order: 1 means consecutive,
 * 2 or more means it belongs to the non-adjacent basis.
 */
P0nStatus p0n_block_count(const struct P0nOrder *order,
                          const uint32_t *labels,
                          size_t len,
                          uint32_t *out);

/**
 * Writes the polygon signature, e.g. `(10,1,2|3|4|5,6|7|8,9)`, as a
 * NUL-terminated string. `written` receives the length excluding the
 * terminator; `cap` must be at least `written + 1`.
 */
P0nStatus p0n_polygon_signature(const struct P0nOrder *order,
                                const uint32_t *labels,
                                size_t len,
                                char *buf,
                                size_t cap,
                                size_t *written);

/**
 * Builds the non-adjacent basis for the order. Free with
 * [`p0n_basis_free`].
 */
P0nStatus p0n_basis_new(const struct P0nOrder *order, struct P0nBasis **out);

void p0n_basis_free(struct P0nBasis *basis);

/**
 * Number of basis elements, or 0 for a null handle.
 */
size_t p0n_basis_len(const struct P0nBasis *basis);

/**
 * Copies the canonical representative of basis element `index`.
 */
P0nStatus p0n_basis_element(const struct P0nBasis *basis,
                            size_t index,
                            uint32_t *out,
                            size_t cap,
                            size_t *written);

/**
 * Expands the divisor with side `labels` in the basis. Writes one
 * `int64_t` per basis element (so `cap` must be at least
 * [`p0n_basis_len`]); entries are always -1, 0, or +1.
 */
P0nStatus p0n_expand(const struct P0nBasis *basis,
                     const uint32_t *labels,
                     size_t len,
                     int64_t *out_coeffs,
                     size_t cap);

/**
 * Runs the exact rank check: true when the relation matrix cuts the
 * divisor space down to the basis dimension. Supports `4 <= n <= 8`.
 */
P0nStatus p0n_quotient_dimension_ok(uint32_t n, bool *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PICARD0N_H */
