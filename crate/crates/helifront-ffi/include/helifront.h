#ifndef HELIFRONT_H
#define HELIFRONT_H

/* Generated from the helifront-ffi crate sources; edit those instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every API call.
 */
typedef enum HfStatus {
  HF_STATUS_OK = 0,
  HF_STATUS_NULL_ARGUMENT = 1,
  HF_STATUS_UTF8_ERROR = 2,
  HF_STATUS_PARSE_ERROR = 3,
  HF_STATUS_INVALID_ARGUMENT = 4,
  /**
   * No smooth unit frame exists along the requested profile.
   */
  HF_STATUS_NO_SMOOTH_SELECTION = 5,
  HF_STATUS_NUMERICAL_ERROR = 6,
  HF_STATUS_BUFFER_TOO_SMALL = 7,
} HfStatus;

/**
 * Edge type of a surface point, mirroring the core classifier tags.
 */
typedef enum HfEdgeTag {
  HF_EDGE_TAG_REGULAR_SURFACE_POINT = 0,
  /**
   * Singular with nonzero radius; `gamma_cusp` carries the profile type.
   */
  HF_EDGE_TAG_GAMMA_EDGE = 1,
  HF_EDGE_TAG_CUSPIDAL_EDGE32 = 2,
  HF_EDGE_TAG_CUSPIDAL_EDGE52 = 3,
  HF_EDGE_TAG_CUSPIDAL_EDGE43 = 4,
  HF_EDGE_TAG_CUSPIDAL_EDGE53 = 5,
  HF_EDGE_TAG_DEGENERATE = 6,
} HfEdgeTag;

/**
 * Plane cusp type of the profile curve behind a `GammaEdge`.
 */
typedef enum HfCuspTag {
  HF_CUSP_TAG_NOT_APPLICABLE = 0,
  HF_CUSP_TAG_REGULAR_POINT = 1,
  HF_CUSP_TAG_CUSP32 = 2,
  HF_CUSP_TAG_CUSP52 = 3,
  HF_CUSP_TAG_CUSP43 = 4,
  HF_CUSP_TAG_CUSP53 = 5,
  HF_CUSP_TAG_DEGENERATE = 6,
} HfCuspTag;

/**
 * Opaque helicoidal surface handle.
 */
typedef struct HfSurface HfSurface;

/**
 * Framed curvature triple at one profile parameter.
 */
typedef struct HfCurvature {
  double jf;
  double kf;
  double hf;
} HfCurvature;

/**
 * Classification outcome with the scalar witnesses that decided it. The
 * named determinants of the full report are available through
 * [`hf_surface_classify_json`].
 */
typedef struct HfClassification {
  enum HfEdgeTag tag;
  /**
   * Profile cusp type when `tag` is `GammaEdge`, otherwise
   * `NotApplicable`.
   */
  enum HfCuspTag gamma_cusp;
  /**
   * Axis trichotomy case 1, 2 or 3; zero when no case applies.
   */
  uint8_t case_index;
  /**
   * Nonzero when a deciding witness fell inside the marginal band.
   */
  uint8_t marginal;
  double beta;
  double beta_dot;
  double ell;
  double ell_dot;
  double x;
  double b;
} HfClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a surface from a named builtin profile.
 *
 * # Safety
 * `name` must be a valid NUL-terminated string and `out` a valid pointer.
 * On success `*out` owns the handle; on failure `*out` is null.
 */
enum HfStatus hf_surface_new_builtin(const char *name, double lambda, struct HfSurface **out);

/**
 * Create a surface from the JSON curve-spec format the CLI accepts.
 *
 * # Safety
 * `spec_json` must be a valid NUL-terminated string and `out` a valid
 * pointer. On success `*out` owns the handle; on failure `*out` is null.
 */
enum HfStatus hf_surface_new_json(const char *spec_json, double lambda, struct HfSurface **out);

/**
 * Release a surface handle. Null is a no-op.
 *
 * # Safety
 * `surface` must be a handle from `hf_surface_new_*` not yet freed.
 */
void hf_surface_free(struct HfSurface *surface);

/**
 * Evaluate the surface point at `(u, v)` into `out_xyz[0..3]`.
 *
 * # Safety
 * `surface` must be a live handle and `out_xyz` must point at three
 * writable doubles.
 */
enum HfStatus hf_surface_point(const struct HfSurface *surface,
                               double u,
                               double v,
                               double *out_xyz);

/**
 * Evaluate the (unnormalized) surface normal at `(u, v)` into
 * `out_xyz[0..3]`. The vector vanishes exactly at singular points.
 *
 * # Safety
 * `surface` must be a live handle and `out_xyz` must point at three
 * writable doubles.
 */
enum HfStatus hf_surface_normal(const struct HfSurface *surface,
                                double u,
                                double v,
                                double *out_xyz);

/**
 * Framed curvature triple `(JF, KF, HF)` at profile parameter `u` under
 * the default frame selection.
 *
 * # Safety
 * `surface` must be a live handle and `out` a valid pointer.
 */
enum HfStatus hf_surface_curvature(const struct HfSurface *surface,
                                   double u,
                                   struct HfCurvature *out);

/**
 * Classify the surface point over profile parameter `u`.
 *
 * # Safety
 * `surface` must be a live handle and `out` a valid pointer.
 */
enum HfStatus hf_surface_classify(const struct HfSurface *surface,
                                  double u,
                                  struct HfClassification *out);

/**
 * Locate singular parameters in `[u_lo, u_hi]`. Writes up to `capacity`
 * values through `out_u` and the total count through `out_len`; returns
 * `BufferTooSmall` when the buffer cannot hold every hit.
 *
 * # Safety
 * `surface` must be a live handle, `out_len` a valid pointer, and `out_u`
 * must point at `capacity` writable doubles whenever `capacity > 0`.
 */
enum HfStatus hf_surface_scan(const struct HfSurface *surface,
                              double u_lo,
                              double u_hi,
                              size_t n_grid,
                              double *out_u,
                              size_t capacity,
                              size_t *out_len);

/**
 * Classify at `u` and return the full report, including the named
 * determinants, as a JSON string.
 *
 * # Safety
 * `surface` must be a live handle and `out_json` a valid pointer. On
 * success `*out_json` owns a string released by [`hf_string_free`]; on
 * failure `*out_json` is null.
 */
enum HfStatus hf_surface_classify_json(const struct HfSurface *surface, double u, char **out_json);

/**
 * Release a string produced by this library. Null is a no-op.
 *
 * # Safety
 * `s` must come from this library and not yet be freed.
 */
void hf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HELIFRONT_H */
