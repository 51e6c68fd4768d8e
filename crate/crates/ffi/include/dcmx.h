#ifndef DCMX_H
#define DCMX_H

/* Generated by the build script; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Call outcome. `Ok` is zero; everything else indicates failure and leaves
// a message for [`dcmx_last_error_message`].
typedef enum DcmxStatus {
  // Success.
  DcmxStatus_Ok = 0,
  // A required pointer argument was null.
  DcmxStatus_NullArgument = 1,
  // A string argument was not valid UTF-8.
  DcmxStatus_InvalidUtf8 = 2,
  // Input text failed to parse or validate.
  DcmxStatus_ParseError = 3,
  // Operand shapes are incompatible.
  DcmxStatus_ShapeMismatch = 4,
  // The standard part of a matrix that must be invertible is singular.
  DcmxStatus_SingularStandardPart = 5,
  // A scalar or vector that must be appreciable has zero standard part.
  DcmxStatus_NotAppreciable = 6,
  // The input does not have the structure the operation requires
  // (block layout, Jordan block, Hermitian symmetry, declared
  // eigenvalues, …).
  DcmxStatus_StructureMismatch = 7,
  // Eigenvalue clustering is ambiguous at the configured tolerance.
  DcmxStatus_IllConditioned = 8,
  // A decomposition failed to converge.
  DcmxStatus_ConvergenceFailure = 9,
  // Index out of range.
  DcmxStatus_OutOfRange = 10,
  // The operation panicked; state is unchanged.
  DcmxStatus_Internal = 99,
} DcmxStatus;

// Opaque dual complex matrix handle.
typedef struct DcmxMatrix DcmxMatrix;

// Numerical tolerance profile; mirror of the library's tolerance set.
typedef struct DcmxTol {
  // Absolute threshold below which a value is zero.
  double abs;
  // Relative singular-value threshold for rank decisions.
  double rank_rel;
  // Relative radius for clustering computed eigenvalues.
  double cluster_rel;
  // Relative residual bound for eigenpair verification.
  double eig_rel;
  // Relative residual bound for canonical-form reconstruction.
  double jordan_rel;
} DcmxTol;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The default tolerance profile.
struct DcmxTol dcmx_tol_default(void);

// Message for the most recent failure on this thread. Never null; empty
// before the first failure. Valid until the next failing call on the same
// thread.
const char *dcmx_last_error_message(void);

// Parses a matrix from its JSON wire form. On success stores a new handle
// in `out`; the caller owns it and must release it with
// [`dcmx_matrix_free`].
enum DcmxStatus dcmx_matrix_parse_json(const char *json, struct DcmxMatrix **out);

// Serializes a matrix to its JSON wire form (pretty-printed). The caller
// owns the returned string and must release it with [`dcmx_string_free`].
enum DcmxStatus dcmx_matrix_to_json(const struct DcmxMatrix *m, char **out);

// Number of rows; zero for a null handle.
size_t dcmx_matrix_rows(const struct DcmxMatrix *m);

// Number of columns; zero for a null handle.
size_t dcmx_matrix_cols(const struct DcmxMatrix *m);

// Reads entry (i, j) into `entry_out[0..4]` as
// `[re_s, im_s, re_d, im_d]`.
enum DcmxStatus dcmx_matrix_entry(const struct DcmxMatrix *m,
                                  size_t i,
                                  size_t j,
                                  double *entry_out);

// Releases a matrix handle. Null is a no-op.
void dcmx_matrix_free(struct DcmxMatrix *m);

// Releases a string returned by this library. Null is a no-op.
void dcmx_string_free(char *s);

// Inverts a dual complex matrix. `tol` may be null for the defaults. On
// success stores a new handle in `out`.
enum DcmxStatus dcmx_invert(const struct DcmxMatrix *m,
                            const struct DcmxTol *tol,
                            struct DcmxMatrix **out);

// Classifies all eigenvalues. On success stores the JSON report (the same
// shape the CLI's `eig --format json` prints) in `out`.
enum DcmxStatus dcmx_eig_json(const struct DcmxMatrix *m, const struct DcmxTol *tol, char **out);

// Computes the canonical (Jordan) form when the standard part is either
// diagonalizable or a single Jordan block, matching the CLI's automatic
// route choice. On success stores the JSON form in `out`.
enum DcmxStatus dcmx_jordan_json(const struct DcmxMatrix *m, const struct DcmxTol *tol, char **out);

// Decides diagonalizability. On success stores the JSON verdict (with the
// transform and residual on a positive verdict) in `out`.
enum DcmxStatus dcmx_diag_json(const struct DcmxMatrix *m, const struct DcmxTol *tol, char **out);

// Eigendecomposition of a Hermitian matrix: dual-number eigenvalues,
// orthonormal eigenvectors, and definiteness verdicts as JSON.
enum DcmxStatus dcmx_hermitian_json(const struct DcmxMatrix *m,
                                    const struct DcmxTol *tol,
                                    char **out);

// Verifies a candidate eigenpair. `lambda` is `[re_s, im_s, re_d, im_d]`;
// `x` must be a single-column matrix. Writes 1 into `verified_out` when
// the pair satisfies the eigen equation at the tolerance, 0 otherwise.
enum DcmxStatus dcmx_verify_eigenpair(const struct DcmxMatrix *m,
                                      const double *lambda,
                                      const struct DcmxMatrix *x,
                                      const struct DcmxTol *tol,
                                      uint8_t *verified_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DCMX_H */
