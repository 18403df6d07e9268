#ifndef HANKEL_ZETA_H
#define HANKEL_ZETA_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Status code returned by every fallible function.
 */
typedef enum HzStatus {
  HZ_STATUS_OK = 0,
  HZ_STATUS_NULL_POINTER = 1,
  HZ_STATUS_INVALID_ARGUMENT = 2,
  HZ_STATUS_POLE = 3,
  HZ_STATUS_DOMAIN = 4,
  HZ_STATUS_CONFIG = 5,
  HZ_STATUS_ACCURACY = 6,
  HZ_STATUS_CONDITIONING = 7,
  HZ_STATUS_NEAR_INTEGER = 8,
  HZ_STATUS_BOUNDARY_ZERO = 9,
  HZ_STATUS_PHASE_TRACKING = 10,
  HZ_STATUS_OVERFLOW = 11,
  HZ_STATUS_PANIC = 12,
} HzStatus;

typedef enum HzBranch {
  HZ_BRANCH_SYMMETRIC = 0,
  HZ_BRANCH_ZERO_TWO_PI = 1,
} HzBranch;

/*
 Treatment of contour evaluations within 1e-2 of a positive integer.
 */
typedef enum HzNearInteger {
  HZ_NEAR_INTEGER_RING = 0,
  HZ_NEAR_INTEGER_FALLBACK = 1,
  HZ_NEAR_INTEGER_REJECT = 2,
} HzNearInteger;

/*
 Hankel contour settings.
 */
typedef struct HzContour HzContour;

/*
 Positive operator spectrum.
 */
typedef struct HzSpectrum HzSpectrum;

/*
 Critical-line zeros found by [`hz_find_zeros`].
 */
typedef struct HzZeroList HzZeroList;

typedef struct HzComplex {
  double re;
  double im;
} HzComplex;

/*
 A computed value with its error estimate.
 */
typedef struct HzValue {
  struct HzComplex value;
  double err_estimate;
  /*
   Number of warnings attached to the computation.
   */
  uint32_t warning_count;
} HzValue;

/*
 One entry of an [`HzZeroList`].
 */
typedef struct HzZero {
  double t;
  double residual;
  double bracket_lo;
  double bracket_hi;
  bool winding_confirmed;
} HzZero;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string.
 */
const char *hz_version(void);

/*
 Copy the last error message of this thread into `buf` (NUL-terminated,
 truncated to `len`). Returns the full message length without the NUL.

 # Safety
 `buf` must be null or point to `len` writable bytes.
 */
size_t hz_last_error_message(char *buf, size_t len);

/*
 Create contour settings. `truncation <= 0` and a NaN `ray_angle` select
 the automatic values.

 # Safety
 `out` must be a valid pointer.
 */
enum HzStatus hz_contour_new(double inner_radius,
                             double truncation,
                             double ray_angle,
                             enum HzBranch branch,
                             struct HzContour **out);

/*
 # Safety
 `contour` must be null or a handle from [`hz_contour_new`], not yet freed.
 */
void hz_contour_free(struct HzContour *contour);

/*
 Explicit spectrum from `len` positive values.

 # Safety
 `values` must point to `len` readable doubles; `out` must be valid.
 */
enum HzStatus hz_spectrum_explicit(const double *values, size_t len, struct HzSpectrum **out);

/*
 The spectrum {1, …, n}.

 # Safety
 `out` must be a valid pointer.
 */
enum HzStatus hz_spectrum_natural(size_t n, struct HzSpectrum **out);

/*
 # Safety
 `spectrum` must be null or a live spectrum handle.
 */
void hz_spectrum_free(struct HzSpectrum *spectrum);

/*
 ζ(α) from the contour representation; `contour` may be null.

 # Safety
 `contour` must be null or live; `out` must be valid.
 */
enum HzStatus hz_zeta_hankel(struct HzComplex alpha,
                             const struct HzContour *contour,
                             enum HzNearInteger near_integer,
                             struct HzValue *out);

/*
 η(α) from the contour representation; `contour` may be null.

 # Safety
 `contour` must be null or live; `out` must be valid.
 */
enum HzStatus hz_eta_hankel(struct HzComplex alpha,
                            const struct HzContour *contour,
                            enum HzNearInteger near_integer,
                            struct HzValue *out);

/*
 Reference ζ(α) from the accelerated alternating series.

 # Safety
 `out` must be a valid pointer.
 */
enum HzStatus hz_zeta_ref(struct HzComplex alpha, struct HzComplex *out);

/*
 η(α) from the accelerated alternating series at tolerance `tol`.

 # Safety
 `out` must be a valid pointer.
 */
enum HzStatus hz_eta_series(struct HzComplex alpha, double tol, struct HzComplex *out);

/*
 Contour normalization constant N(α); `contour` may be null.

 # Safety
 `contour` must be null or live; `out` must be valid.
 */
enum HzStatus hz_normalization_constant(struct HzComplex alpha,
                                        const struct HzContour *contour,
                                        struct HzValue *out);

/*
 |ζ(α) − χ(α)ζ(1−α)| from the contour form; `contour` may be null.

 # Safety
 `contour` must be null or live; `out` must be valid.
 */
enum HzStatus hz_functional_equation_residual(struct HzComplex alpha,
                                              const struct HzContour *contour,
                                              double *out);

/*
 Normalized Mellin transform of e^{−e^{−c} g}, equal to e^{cα}.

 # Safety
 `out` must be a valid pointer.
 */
enum HzStatus hz_scalar_det_side(double c, struct HzComplex alpha, struct HzValue *out);

/*
 Zeros of ζ on the critical line with ordinates in [t_min, t_max].

 # Safety
 `out` must be a valid pointer.
 */
enum HzStatus hz_find_zeros(double t_min, double t_max, size_t max_count, struct HzZeroList **out);

/*
 Number of zeros in a list; 0 for null.

 # Safety
 `list` must be null or live.
 */
size_t hz_zero_list_len(const struct HzZeroList *list);

/*
 # Safety
 `list` must be live; `out` must be valid.
 */
enum HzStatus hz_zero_list_get(const struct HzZeroList *list, size_t index, struct HzZero *out);

/*
 # Safety
 `list` must be null or a live list handle.
 */
void hz_zero_list_free(struct HzZeroList *list);

/*
 Zeros of ζ in [re_lo, re_hi] × [t_lo, t_hi] by the argument principle.

 # Safety
 `out` must be a valid pointer.
 */
enum HzStatus hz_count_zeros(double re_lo, double re_hi, double t_lo, double t_hi, int64_t *out);

/*
 Relative residual of det(e^A) = e^{tr A} for a row-major `d × d` matrix.

 # Safety
 `entries` must point to `d * d` readable values; `out` must be valid.
 */
enum HzStatus hz_exp_tr_det_residual(const struct HzComplex *entries,
                                     size_t d,
                                     bool hermitian,
                                     double *out);

/*
 Log-modulus and phase gaps between the two sides of the trace/determinant
 relation for `spectrum` at α on phase branch (n, sign).

 # Safety
 `spectrum` must be live; the out pointers must be valid.
 */
enum HzStatus hz_theorem_residual(const struct HzSpectrum *spectrum,
                                  struct HzComplex alpha,
                                  uint32_t phase_n,
                                  int8_t phase_sign,
                                  double *log_gap,
                                  double *phase_gap);

/*
 Name of a status code as a static NUL-terminated string.
 */
const char *hz_status_name(enum HzStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HANKEL_ZETA_H */
