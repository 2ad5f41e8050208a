#ifndef STRINGFORM_H
#define STRINGFORM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SfChirality {
  SF_CHIRALITY_LEFT = 0,
  SF_CHIRALITY_RIGHT = 1,
} SfChirality;

// Sign class of the Ricci curvature.
typedef enum SfRegion {
  SF_REGION_INTERIOR = 0,
  SF_REGION_BOUNDARY = 1,
  SF_REGION_OUTSIDE = 2,
} SfRegion;

// Result codes of the C interface.
typedef enum SfStatus {
  SF_STATUS_OK = 0,
  SF_STATUS_NULL_POINTER = 1,
  SF_STATUS_INVALID_ARGUMENT = 2,
  SF_STATUS_PARSE = 3,
  SF_STATUS_INTERNAL = 4,
} SfStatus;

// Opaque handle to the metric `g_{α1,α2}` of a given chirality.
typedef struct SfMetric SfMetric;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates `g_{α1,α2}`. On success `*out` owns a handle to release with
// [`sf_metric_free`].
//
// # Safety
// `out` must be null or valid for writing one pointer.
enum SfStatus sf_metric_new(double alpha1,
                            double alpha2,
                            enum SfChirality chirality,
                            struct SfMetric **out);

// Releases a handle from [`sf_metric_new`]. Null is ignored.
//
// # Safety
// `metric` must be null or a live handle not freed before.
void sf_metric_free(struct SfMetric *metric);

// Writes the Ricci eigenvalues along `α1 e1, α2 e2, e3` to `out[0..3]` and
// the region to `*region` (which may be null).
//
// # Safety
// `metric` must be a live handle; `out` must be valid for three doubles.
enum SfStatus sf_ricci_eigenvalues(const struct SfMetric *metric,
                                   double *out,
                                   enum SfRegion *region);

// `∫_{S^3} H_S` for the class named by `class` ("L", "R", "dD4", "L+2", ...).
//
// # Safety
// `metric` must be a live handle, `class` a NUL-terminated string and `out`
// valid for one double.
enum SfStatus sf_integral_h(const struct SfMetric *metric, const char *class_, double *out);

// The e-invariant of a class as `*numerator / 24` with `0 <= *numerator < 24`.
//
// # Safety
// `class` must be a NUL-terminated string and `numerator` valid for one int.
enum SfStatus sf_e_invariant(const char *class_, int32_t *numerator);

// Copies the last error message of this thread into `buf` (NUL-terminated,
// truncated to `len`) and returns the full message length in bytes.
//
// # Safety
// `buf` must be null or valid for writing `len` bytes.
size_t sf_last_error(char *buf, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRINGFORM_H */
