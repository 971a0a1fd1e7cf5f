#ifndef STABTOOL_H
#define STABTOOL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Rejection reason reported in a [`StabDiagnosis`].
 */
typedef enum {
  STAB_REASON_NONE = 0,
  STAB_REASON_ZERO_VECTOR = 1,
  STAB_REASON_NON_FINITE = 2,
  STAB_REASON_SUPPORT_SIZE_NOT_POWER_OF_TWO = 3,
  STAB_REASON_SUPPORT_NOT_AFFINE = 4,
  STAB_REASON_AMPLITUDE_OFF_GRID = 5,
  STAB_REASON_AMPLITUDE_INCONSISTENT = 6,
  STAB_REASON_FIRST_COLUMN_NOT_STABILISER = 10,
  STAB_REASON_COLUMN_NOT_STABILISED = 11,
  STAB_REASON_SIGN_MATRIX_SINGULAR = 12,
  STAB_REASON_CANDIDATE_NOT_HERMITIAN = 13,
  STAB_REASON_CANDIDATES_DO_NOT_COMMUTE = 14,
  STAB_REASON_RELATIVE_PHASE_INCONSISTENT = 15,
  STAB_REASON_NON_UNITARY = 16,
} StabReason;

typedef enum {
  STAB_STATUS_OK = 0,
  STAB_STATUS_NULL_POINTER = 1,
  STAB_STATUS_INVALID_INPUT = 2,
  STAB_STATUS_REJECTED = 3,
  STAB_STATUS_BUFFER_TOO_SMALL = 4,
  STAB_STATUS_INTERNAL = 5,
} StabStatus;

/**
 * Which half of a tableau row to read.
 */
typedef enum {
  /**
   * The image of `Z_i`.
   */
  STAB_TABLEAU_PART_U = 0,
  /**
   * The image of `X_i`.
   */
  STAB_TABLEAU_PART_V = 1,
} StabTableauPart;

/**
 * Opaque check matrix of a stabiliser state.
 */
typedef struct StabCheckMatrix StabCheckMatrix;

/**
 * Opaque stabiliser tableau of a Clifford gate.
 */
typedef struct StabTableau StabTableau;

/**
 * Verdict of a verification call. `witness` is a basis index (states) or
 * column index (gates), or -1.
 */
typedef struct {
  bool accepted;
  StabReason reason;
  int64_t witness;
} StabDiagnosis;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread; empty after a
 * success. Valid until the next stabtool call on the same thread.
 */
const char *stab_last_error(void);

/**
 * Decides whether `len` amplitudes are proportional to a stabiliser state.
 */
StabStatus stab_verify_state(const double *amplitudes, uintptr_t len, StabDiagnosis *out);

/**
 * Check matrix of a verified stabiliser state; `STAB_STATUS_REJECTED` otherwise.
 */
StabStatus stab_state_to_check(const double *amplitudes, uintptr_t len, StabCheckMatrix **out);

/**
 * Builds a check matrix from `n` rows of `2n + 1` characters `0`/`1`
 * laid out as `q | p | sign`.
 */
StabStatus stab_check_matrix_parse(const char *const *rows, uintptr_t n, StabCheckMatrix **out);

/**
 * Qubit count, or 0 for a null handle.
 */
uintptr_t stab_check_matrix_qubits(const StabCheckMatrix *m);

/**
 * Writes row `i` as a nul-terminated bitstring; needs `2n + 2` bytes.
 */
StabStatus stab_check_matrix_row(const StabCheckMatrix *m,
                                 uintptr_t i,
                                 char *buf,
                                 uintptr_t capacity);

/**
 * Writes the `2^n` normalised amplitudes of the state; `capacity` counts
 * complex values.
 */
StabStatus stab_check_to_state(const StabCheckMatrix *m, double *out, uintptr_t capacity);

void stab_check_matrix_free(StabCheckMatrix *m);

/**
 * Decides whether the `dim × dim` row-major matrix is a Clifford gate.
 */
StabStatus stab_verify_gate(const double *entries, uintptr_t dim, StabDiagnosis *out);

/**
 * Tableau of a verified Clifford matrix; `STAB_STATUS_REJECTED` otherwise.
 */
StabStatus stab_gate_to_tableau(const double *entries, uintptr_t dim, StabTableau **out);

/**
 * Builds a tableau from `n` pairs of Pauli literals such as `+XZ`, `-iYI`.
 * Fails unless the conjugate-tuple relations hold.
 */
StabStatus stab_tableau_parse(const char *const *u,
                              const char *const *v,
                              uintptr_t n,
                              StabTableau **out);

/**
 * Tableau of a seeded random H/S/CNOT circuit of depth `10n`.
 */
StabStatus stab_tableau_random(uintptr_t n, uint64_t seed, StabTableau **out);

uintptr_t stab_tableau_qubits(const StabTableau *t);

/**
 * Writes `U_i` or `V_i` as a nul-terminated Pauli literal; `n + 3` bytes
 * suffice. `part` is a [`StabTableauPart`] value.
 */
StabStatus stab_tableau_row(const StabTableau *t,
                            uintptr_t i,
                            uint32_t part,
                            char *buf,
                            uintptr_t capacity);

/**
 * Writes the `2^n × 2^n` row-major matrix; `capacity` counts complex values.
 */
StabStatus stab_tableau_to_matrix(const StabTableau *t, double *out, uintptr_t capacity);

void stab_tableau_free(StabTableau *t);

/**
 * Converts a JSON document to the kind named by `target` (`amplitudes`,
 * `triple`, `check_matrix`, `tableau`, `matrix`). The result must be
 * released with [`stab_string_free`].
 */
StabStatus stab_convert_document(const char *json, const char *target, char **out);

void stab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STABTOOL_H */
