#ifndef POWERDOM_H
#define POWERDOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum PdStatus {
  PD_STATUS_OK = 0,
  PD_STATUS_NULL_POINTER = 1,
  PD_STATUS_INVALID_UTF8 = 2,
  PD_STATUS_PARSE = 3,
  PD_STATUS_DOMAIN = 4,
  PD_STATUS_NO_FORMULA = 5,
  PD_STATUS_OUT_OF_RANGE = 6,
  PD_STATUS_BUDGET_EXCEEDED = 7,
  PD_STATUS_BUFFER_TOO_SMALL = 8,
  PD_STATUS_PANIC = 9,
} PdStatus;

typedef enum PdParameter {
  PD_PARAMETER_GAMMA_P = 0,
  PD_PARAMETER_GAMMA_BAR_P = 1,
  PD_PARAMETER_ZERO_FORCING_NUMBER = 2,
  PD_PARAMETER_FAILED_ZERO_FORCING_NUMBER = 3,
  PD_PARAMETER_DOMINATION_NUMBER = 4,
  PD_PARAMETER_INDEPENDENCE_NUMBER = 5,
} PdParameter;

// Opaque graph handle.
typedef struct PdGraph PdGraph;

// Opaque reduction handle. Owns its gadget graph.
typedef struct PdReduction PdReduction;

typedef struct PdClassification {
  bool is_pds;
  bool is_fpds;
  bool is_spds;
  bool properly_stalled;
  bool maximally_stalled;
  // Size of the monitored fixed point.
  uintptr_t monitored_count;
} PdClassification;

typedef struct PdSolverOptions {
  uint64_t budget;
  uintptr_t workers;
  bool canonical;
} PdSolverOptions;

// Outcome of a solver call. The witness is written to a caller buffer.
typedef struct PdSolverResult {
  uintptr_t value;
  uintptr_t witness_len;
  uint64_t calls;
} PdSolverResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until the
// next call into this library on the same thread.
const char *pd_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void pd_string_free(char *s);

// Parses an edge list (`#` comments, optional leading vertex count).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum PdStatus pd_graph_from_edge_list(const char *text, struct PdGraph **out);

// Builds a graph from `edge_count` index pairs stored flat in `edges`.
//
// # Safety
// `edges` must point to `2 * edge_count` values; `out` must be writable.
enum PdStatus pd_graph_from_edges(uintptr_t n,
                                  const uintptr_t *edges,
                                  uintptr_t edge_count,
                                  struct PdGraph **out);

// Generates a family member from a descriptor such as `"ladder:9"`.
//
// # Safety
// `descriptor` must be a NUL-terminated string; `out` must be writable.
enum PdStatus pd_graph_from_family(const char *descriptor, struct PdGraph **out);

// # Safety
// `g` must come from this library and not have been freed. Null is ignored.
void pd_graph_free(struct PdGraph *g);

// Vertex count, or 0 for null.
//
// # Safety
// `g` must be null or a live handle.
uintptr_t pd_graph_vertex_count(const struct PdGraph *g);

// Edge count, or 0 for null.
//
// # Safety
// `g` must be null or a live handle.
uintptr_t pd_graph_edge_count(const struct PdGraph *g);

// Index of the vertex labeled `label`.
//
// # Safety
// `g` must be a live handle, `label` NUL-terminated, `out` writable.
enum PdStatus pd_graph_find_label(const struct PdGraph *g, const char *label, uintptr_t *out);

// Graph as JSON `{"n":..,"edges":[[u,v],..],"labels":[..]}`.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum PdStatus pd_graph_to_json(const struct PdGraph *g, char **out);

// Classifies the vertex set `set[0..len]`.
//
// # Safety
// `g` must be a live handle, `set` must point to `len` indices, `out` writable.
enum PdStatus pd_classify(const struct PdGraph *g,
                          const uintptr_t *set,
                          uintptr_t len,
                          struct PdClassification *out);

// Propagation trace as JSON `{"kind":..,"steps":[..],"stabilized_at":i}`.
//
// # Safety
// `g` must be a live handle, `set` must point to `len` indices, `out` writable.
enum PdStatus pd_trace_json(const struct PdGraph *g,
                            const uintptr_t *set,
                            uintptr_t len,
                            bool zero_forcing,
                            char **out);

struct PdSolverOptions pd_solver_options_default(void);

// Computes `parameter` exactly. The witness is written to `witness[0..cap]`;
// on [`PdStatus::BufferTooSmall`] `out->witness_len` still holds the size needed.
// On [`PdStatus::BudgetExceeded`] `out->calls` holds the budget.
//
// # Safety
// `g` must be a live handle, `options` null (defaults) or valid, `witness`
// writable for `cap` entries, `out` writable.
enum PdStatus pd_solve(const struct PdGraph *g,
                       enum PdParameter parameter,
                       const struct PdSolverOptions *options,
                       uintptr_t *witness,
                       uintptr_t cap,
                       struct PdSolverResult *out);

// Closed-form failed power domination number of a family member.
//
// # Safety
// `descriptor` must be NUL-terminated and `out` writable.
enum PdStatus pd_family_oracle(const char *descriptor, uintptr_t *out);

// Returns the extremal value (`n-1`, `n-2` or `n-3`) through `out` and true,
// or false when no extremal condition holds.
//
// # Safety
// `g` must be a live handle and `out` writable.
bool pd_extremal_gamma_bar(const struct PdGraph *g, uintptr_t *out);

// Builds the independent-set gadget. `path_len == 0` selects the faithful
// length `n²`.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum PdStatus pd_reduction_build(const struct PdGraph *g,
                                 uintptr_t path_len,
                                 struct PdReduction **out);

// # Safety
// `r` must come from this library and not have been freed. Null is ignored.
void pd_reduction_free(struct PdReduction *r);

// Borrowed gadget graph, valid until `r` is freed. Do not pass it to
// [`pd_graph_free`].
//
// # Safety
// `r` must be null or a live handle.
const struct PdGraph *pd_reduction_graph(const struct PdReduction *r);

// `path_len·|E| + k`, or 0 for null.
//
// # Safety
// `r` must be null or a live handle.
uintptr_t pd_reduction_m_of(const struct PdReduction *r, uintptr_t k);

// Index of the hub vertex, or 0 for null.
//
// # Safety
// `r` must be null or a live handle.
uintptr_t pd_reduction_hub(const struct PdReduction *r);

// # Safety
// `r` must be null or a live handle.
bool pd_reduction_is_faithful(const struct PdReduction *r);

// Lifts an independent set of the source graph into the gadget. The lifted set
// goes to `buf[0..cap]` and its size to `out_len` (set even when the buffer is
// too small).
//
// # Safety
// `r` must be a live handle, `set` must point to `len` indices, `buf` writable
// for `cap` entries, `out_len` writable.
enum PdStatus pd_reduction_lift(const struct PdReduction *r,
                                const uintptr_t *set,
                                uintptr_t len,
                                uintptr_t *buf,
                                uintptr_t cap,
                                uintptr_t *out_len);

// Role maps of the gadget as JSON.
//
// # Safety
// `r` must be a live handle and `out` writable.
enum PdStatus pd_reduction_sidecar_json(const struct PdReduction *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POWERDOM_H */
