#ifndef SDYB_H
#define SDYB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Which complex [`sdyb_sigma_cohomology`] builds from a solution.
typedef enum SdybComplex {
  SDYB_COMPLEX_BRAIDED = 0,
  SDYB_COMPLEX_BIRACK = 1,
} SdybComplex;

// Result code of every fallible call.
typedef enum SdybStatus {
  SDYB_STATUS_OK = 0,
  SDYB_STATUS_NULL_POINTER = 1,
  SDYB_STATUS_INVALID_ARGUMENT = 2,
  // The structure does not satisfy what the operation needs (not a rack, not a birack, ...).
  SDYB_STATUS_DOMAIN = 3,
  SDYB_STATUS_BUFFER_TOO_SMALL = 4,
  SDYB_STATUS_PANIC = 5,
} SdybStatus;

typedef enum SdybSubcomplex {
  SDYB_SUBCOMPLEX_FULL = 0,
  // `f(…, a, a, …) = 0` (quandle or biquandle cochains).
  SDYB_SUBCOMPLEX_DEGENERATE = 1,
  // `f(t(a), a) = 0`, braided complex in degree 2 only.
  SDYB_SUBCOMPLEX_BRAIDED_BIQUANDLE = 2,
} SdybSubcomplex;

// Opaque operation table `a ◁ b`.
typedef struct SdybMagma SdybMagma;

// Opaque solution `σ(a,b)`.
typedef struct SdybSigma SdybSigma;

// Axiom flags of an operation table.
typedef struct SdybMagmaReport {
  bool is_shelf;
  bool is_rack;
  bool is_quandle;
} SdybMagmaReport;

// Axiom flags of a solution.
typedef struct SdybSigmaReport {
  bool is_braided;
  bool is_invertible;
  bool is_left_nondegenerate;
  bool is_right_nondegenerate;
  bool is_birack;
  bool is_biquandle;
} SdybSigmaReport;

// Message for the last failed call on this thread, or NULL. Valid until the next call.
const char *sdyb_last_error(void);

// Builds a magma from a row-major `size*size` table.
//
// # Safety
// `table` must point to `len` readable values; `out` must be writable.
enum SdybStatus sdyb_magma_new(uint32_t size,
                               const uint32_t *table,
                               size_t len,
                               struct SdybMagma **out);

// # Safety
// `out` must be writable.
enum SdybStatus sdyb_magma_trivial(uint32_t size, struct SdybMagma **out);

// `a ◁ b = t·a + (1−t)·b mod m`.
//
// # Safety
// `out` must be writable.
enum SdybStatus sdyb_magma_alexander(uint32_t m, int64_t t, struct SdybMagma **out);

// # Safety
// `magma` must be NULL or a handle from this library not yet freed.
void sdyb_magma_free(struct SdybMagma *magma);

// Carrier size, or 0 for NULL.
//
// # Safety
// `magma` must be NULL or a live handle.
uint32_t sdyb_magma_size(const struct SdybMagma *magma);

// Copies the row-major table into `out` (capacity `cap`).
//
// # Safety
// `magma` must be live; `out` must have room for `cap` values.
enum SdybStatus sdyb_magma_table(const struct SdybMagma *magma, uint32_t *out, size_t cap);

// # Safety
// `magma` must be live; `out` must be writable.
enum SdybStatus sdyb_magma_check(const struct SdybMagma *magma, struct SdybMagmaReport *out);

// Rack cohomology `H^k(ℤ_n)` (`n = 0` for ℤ) as cyclic factor orders, 0 marking a copy of ℤ.
//
// `*len` receives the number of factors, also when `cap` is too small.
//
// # Safety
// `magma` must be live; `factors` must have room for `cap` values; `len` must be writable.
enum SdybStatus sdyb_magma_cohomology(const struct SdybMagma *magma,
                                      bool quandle,
                                      uint32_t k,
                                      uint64_t n,
                                      uint64_t *factors,
                                      size_t cap,
                                      size_t *len);

// Builds a solution from `size*size` pairs, row-major, flattened to `2*size*size` values.
//
// # Safety
// `pairs` must point to `len` readable values; `out` must be writable.
enum SdybStatus sdyb_sigma_new(uint32_t size,
                               const uint32_t *pairs,
                               size_t len,
                               struct SdybSigma **out);

// `σ(a,b) = (b, a◁b)`.
//
// # Safety
// `magma` must be live; `out` must be writable.
enum SdybStatus sdyb_sigma_from_shelf(const struct SdybMagma *magma, struct SdybSigma **out);

// # Safety
// `sigma` must be NULL or a handle from this library not yet freed.
void sdyb_sigma_free(struct SdybSigma *sigma);

// Carrier size, or 0 for NULL.
//
// # Safety
// `sigma` must be NULL or a live handle.
uint32_t sdyb_sigma_size(const struct SdybSigma *sigma);

// # Safety
// `sigma` must be live; `out` must be writable.
enum SdybStatus sdyb_sigma_check(const struct SdybSigma *sigma, struct SdybSigmaReport *out);

// The structure rack of a birack, as a new magma handle.
//
// # Safety
// `sigma` must be live; `out` must be writable.
enum SdybStatus sdyb_sigma_structure_rack(const struct SdybSigma *sigma, struct SdybMagma **out);

// Writes `J(tuple)` (same length as `tuple`) into `out`.
//
// # Safety
// `tuple` must hold `len` values and `out` must have room for `len` values.
enum SdybStatus sdyb_sigma_guitar(const struct SdybSigma *sigma,
                                  const uint32_t *tuple,
                                  size_t len,
                                  uint32_t *out);

// Number of colorings of the closure of the braid word `letters` on `strands` strands.
//
// # Safety
// `letters` must hold `len` values; `out` must be writable.
enum SdybStatus sdyb_sigma_closure_count(const struct SdybSigma *sigma,
                                         uint32_t strands,
                                         const int32_t *letters,
                                         size_t len,
                                         uint64_t *out);

// Braided or birack cohomology of a solution; output as in [`sdyb_magma_cohomology`].
//
// # Safety
// `sigma` must be live; `factors` must have room for `cap` values; `len` must be writable.
enum SdybStatus sdyb_sigma_cohomology(const struct SdybSigma *sigma,
                                      enum SdybComplex complex,
                                      enum SdybSubcomplex sub,
                                      uint32_t k,
                                      uint64_t n,
                                      uint64_t *factors,
                                      size_t cap,
                                      size_t *len);

#endif  /* SDYB_H */
