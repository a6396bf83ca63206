#ifndef GROUPCOVER_H
#define GROUPCOVER_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every function.
typedef enum GcStatus {
  GC_STATUS_OK = 0,
  GC_STATUS_NULL_POINTER = 1,
  GC_STATUS_INVALID_UTF8 = 2,
  GC_STATUS_NOT_A_GROUP = 3,
  GC_STATUS_CLOSURE_EXCEEDS_LIMIT = 4,
  GC_STATUS_LATTICE_EXCEEDS_LIMIT = 5,
  GC_STATUS_UNKNOWN_SPEC = 6,
  GC_STATUS_INVALID_ARGUMENT = 7,
  GC_STATUS_CLAUSE_MISMATCH = 8,
  GC_STATUS_PARSE = 9,
  GC_STATUS_PANIC = 10,
} GcStatus;

// Covering number predicted by the quotient classifier.
typedef enum GcSigmaClass {
  GC_SIGMA_CLASS_UNCOVERABLE = 0,
  GC_SIGMA_CLASS_THREE = 3,
  GC_SIGMA_CLASS_FOUR = 4,
  GC_SIGMA_CLASS_FIVE = 5,
  GC_SIGMA_CLASS_SIX = 6,
  GC_SIGMA_CLASS_OTHER_OR_UNKNOWN = 255,
} GcSigmaClass;

// Opaque group handle. The subgroup lattice is built on first use.
typedef struct GcGroup GcGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a group from a spec such as `"S3"`, `"C2xC2"` or `"F20"`.
//
// # Safety
// `spec` must be a nul-terminated string and `out` a valid pointer.
enum GcStatus gc_group_from_spec(const char *spec, struct GcGroup **out);

// Builds a group from a row-major `order × order` Cayley table of element indices.
//
// # Safety
// `table` must point to `order * order` readable values and `out` be a valid pointer.
enum GcStatus gc_group_from_table(const size_t *table, size_t order, struct GcGroup **out);

// Builds a group from the JSON group-file format (`kind` `"cayley"` or `"perm"`).
//
// # Safety
// `json` must be a nul-terminated string and `out` a valid pointer.
enum GcStatus gc_group_from_json(const char *json, struct GcGroup **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` must be null or a handle from a `gc_group_from_*` call that has not been freed.
void gc_group_free(struct GcGroup *g);

// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum GcStatus gc_group_order(const struct GcGroup *g, size_t *out);

// Number of subgroups, including the trivial subgroup and the group itself.
//
// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum GcStatus gc_group_subgroup_count(const struct GcGroup *g, size_t *out);

// Exact covering number; writes 0 when the group is not a union of proper subgroups.
//
// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum GcStatus gc_group_sigma(const struct GcGroup *g, size_t *out);

// Largest union of `k` distinct proper subgroups, as a size and a reduced fraction of the order.
//
// # Safety
// `g` must be a live handle and the out-pointers valid.
enum GcStatus gc_group_mu(const struct GcGroup *g,
                          size_t k,
                          size_t *union_size,
                          int64_t *numer,
                          int64_t *denom);

// Covering number predicted by the quotient classifier.
//
// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum GcStatus gc_group_classify(const struct GcGroup *g, enum GcSigmaClass *out);

// # Safety
// `a` and `b` must be live handles and `out` a valid pointer.
enum GcStatus gc_are_isomorphic(const struct GcGroup *a, const struct GcGroup *b, bool *out);

// `Σ n_i − n_d · Σ_{i≠d} n_i` for the ratios `numers[i] / denoms[i]`.
//
// # Safety
// `numers` and `denoms` must point to `len` readable values and the out-pointers be valid.
enum GcStatus gc_star_bound(const int64_t *numers,
                            const int64_t *denoms,
                            size_t len,
                            size_t designated,
                            int64_t *numer,
                            int64_t *denom);

// Message for the last failed call on this thread, or an empty string after a success.
// The pointer stays valid until the next call on the same thread.
const char *gc_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GROUPCOVER_H */
