/* C interface to the assemblage library. */

#ifndef ASSEMBLAGE_H
#define ASSEMBLAGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirroring the CLI exit codes where applicable.
 */
typedef enum AsmStatus {
  AsmOk = 0,
  /**
   * Invalid input for the requested operation.
   */
  AsmDomainError = 2,
  /**
   * A resource cap was reached before the result was settled.
   */
  AsmBudgetExceeded = 3,
  /**
   * Input text could not be parsed.
   */
  AsmParseError = 4,
  /**
   * A required pointer argument was null.
   */
  AsmNullPointer = 5,
  /**
   * Input text was not valid UTF-8.
   */
  AsmInvalidUtf8 = 6,
} AsmStatus;

/**
 * Opaque result of an index computation.
 */
typedef struct AsmIndexResult AsmIndexResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Compute the assembly index of a text string.
 *
 * `max_nodes = 0` means unlimited; `max_millis = 0` disables the time cap.
 * On success `*out` owns a result handle (the result may be an inexact
 * interval if the budget ran out; inspect [`asm_result_exact`]).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum AsmStatus asm_string_index(const char *text,
                                uint64_t max_nodes,
                                uint64_t max_millis,
                                uint32_t threads,
                                struct AsmIndexResult **out);

/**
 * Compute the assembly index of a plain-text grid (`.` = empty cell).
 *
 * # Safety
 * `grid` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum AsmStatus asm_grid_index(const char *grid,
                              bool rotations,
                              uint64_t max_nodes,
                              uint64_t max_millis,
                              uint32_t threads,
                              struct AsmIndexResult **out);

/**
 * Compute the assembly index of a connected graph in edge-list form.
 *
 * # Safety
 * `edge_list` must be a valid NUL-terminated string and `out` a valid
 * pointer.
 */
enum AsmStatus asm_graph_index(const char *edge_list,
                               uint32_t vertex_cap,
                               uint64_t max_nodes,
                               uint64_t max_millis,
                               uint32_t threads,
                               struct AsmIndexResult **out);

/**
 * Exact minimal addition-chain length of `n`.
 *
 * # Safety
 * `out_length` must be a valid pointer.
 */
enum AsmStatus asm_chain_length(uint64_t n, uint64_t *out_length);

/**
 * Minimal vectorial addition-chain length of the `len`-dimensional vector
 * at `components`. Writes a certified interval; `*out_exact` tells whether
 * the two ends coincide.
 *
 * # Safety
 * `components` must point to `len` readable values; the three out-pointers
 * must be valid.
 */
enum AsmStatus asm_vector_chain_length(const uint64_t *components,
                                       uintptr_t len,
                                       uint64_t exact_sum_limit,
                                       uint64_t *out_lower,
                                       uint64_t *out_upper,
                                       bool *out_exact);

/**
 * Shannon entropy of the character distribution of `text`, in bits.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out_bits` a valid
 * pointer.
 */
enum AsmStatus asm_shannon_entropy(const char *text, double *out_bits);

/**
 * Replay the witness inside a JSON result document. Returns `AsmOk` for a
 * valid document and `AsmDomainError` for a tampered one; when
 * `reason_out` is non-null and the document is invalid, it receives a
 * newly allocated string (free with [`asm_string_free`]).
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `reason_out` may be null.
 */
enum AsmStatus asm_verify_json(const char *json, char **reason_out);

/**
 * Certified lower bound of the result.
 *
 * # Safety
 * `result` must be a live handle from this library.
 */
uint64_t asm_result_lower(const struct AsmIndexResult *result);

/**
 * Certified upper bound of the result.
 *
 * # Safety
 * `result` must be a live handle from this library.
 */
uint64_t asm_result_upper(const struct AsmIndexResult *result);

/**
 * Whether the bounds coincide (the index is exact).
 *
 * # Safety
 * `result` must be a live handle from this library.
 */
bool asm_result_exact(const struct AsmIndexResult *result);

/**
 * Number of search nodes expanded.
 *
 * # Safety
 * `result` must be a live handle from this library.
 */
uint64_t asm_result_nodes_expanded(const struct AsmIndexResult *result);

/**
 * Number of steps in the witness pathway.
 *
 * # Safety
 * `result` must be a live handle from this library.
 */
uintptr_t asm_result_witness_len(const struct AsmIndexResult *result);

/**
 * The full result as a JSON document (free with [`asm_string_free`]).
 * Returns null on allocation failure.
 *
 * # Safety
 * `result` must be a live handle from this library.
 */
char *asm_result_to_json(const struct AsmIndexResult *result);

/**
 * Release a string allocated by this library.
 *
 * # Safety
 * `s` must be null or a string previously returned by this library, not
 * yet freed.
 */
void asm_string_free(char *s);

/**
 * Release a result handle.
 *
 * # Safety
 * `result` must be null or a live handle from this library, not yet freed.
 */
void asm_result_free(struct AsmIndexResult *result);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ASSEMBLAGE_H */
