#ifndef HURWITZ_H
#define HURWITZ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum HzCountKind {
  HZ_COUNT_EXACT = 0,
  // One of exactly two values, `low` or `high`.
  HZ_COUNT_AMBIGUOUS = 1,
  // Anywhere in `[low, high]`.
  HZ_COUNT_BOUNDED = 2,
} HzCountKind;

typedef enum HzGroupClass {
  HZ_GROUP_SYMMETRIC = 0,
  HZ_GROUP_ALTERNATING = 1,
  HZ_GROUP_OTHER = 2,
} HzGroupClass;

typedef enum HzStatus {
  HZ_OK = 0,
  HZ_NULL_POINTER = 1,
  HZ_INVALID_UTF8 = 2,
  HZ_PARSE_ERROR = 3,
  HZ_INVALID_INPUT = 4,
  HZ_GENUS_CONDITION = 5,
  HZ_UNSUPPORTED = 6,
  HZ_BOUND_EXCEEDED = 7,
  HZ_RESOURCE_GUARD = 8,
  HZ_INDEX_OUT_OF_RANGE = 9,
  HZ_IO_ERROR = 10,
  HZ_PANIC = 11,
} HzStatus;

// Factorizations of a type, in canonical order.
typedef struct HzFactorizationList HzFactorizationList;

// A polynomial over a prime field.
typedef struct HzPoly HzPoly;

// A ramification type.
typedef struct HzType HzType;

// A braid orbit: its length and the node monodromy, a single
// `node_a`-cycle (`node_b == 0`) or a pair `node_a-node_b`.
typedef struct HzOrbit {
  size_t length;
  size_t node_a;
  size_t node_b;
} HzOrbit;

typedef struct HzCount {
  enum HzCountKind kind;
  uint64_t low;
  uint64_t high;
} HzCount;

typedef struct HzCensus {
  uint64_t h;
  uint64_t single_cycle_bad;
  struct HzCount two_cycle_bad;
  struct HzCount bad;
  struct HzCount good;
} HzCensus;

typedef struct HzTail {
  uint64_t h;
  uint64_t m;
  int64_t sigma_num;
  int64_t sigma_den;
} HzTail;

typedef struct HzGroupReport {
  size_t degree;
  uint64_t order;
  bool transitive;
  enum HzGroupClass classification;
} HzGroupReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failing call on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *hz_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *hz_version(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void hz_string_free(char *s);

// Parse `d:e1,e2,..` (pairs written `e1-e2`).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum HzStatus hz_type_parse(const char *text, struct HzType **out);

// # Safety
// `t` must be NULL or a handle from [`hz_type_parse`], not yet freed.
void hz_type_free(struct HzType *t);

// # Safety
// `t` must be a live handle; `out` must be writable.
enum HzStatus hz_type_degree(const struct HzType *t, size_t *out);

// # Safety
// `t` must be a live handle; `out` must be writable.
enum HzStatus hz_type_to_string(const struct HzType *t, char **out);

// Hurwitz number from the closed formulas.
//
// # Safety
// `t` must be a live handle; `out` must be writable.
enum HzStatus hz_hurwitz_formula(const struct HzType *t, uint64_t *out);

// Hurwitz number by enumeration, with bounds from the environment.
//
// # Safety
// `t` must be a live handle; `out` must be writable.
enum HzStatus hz_hurwitz_brute(const struct HzType *t, uint64_t *out);

// # Safety
// `t` must be a live handle; `out` must be writable.
enum HzStatus hz_enumerate(const struct HzType *t, struct HzFactorizationList **out);

// # Safety
// `list` must be a live handle; `out` must be writable.
enum HzStatus hz_list_len(const struct HzFactorizationList *list, size_t *out);

// Entry `index` as a JSON line `{"d":..,"tuple":[..]}` with 1-based points.
//
// # Safety
// `list` must be a live handle; `out` must be writable.
enum HzStatus hz_list_get_json(const struct HzFactorizationList *list, size_t index, char **out);

// # Safety
// `list` must be NULL or a handle from [`hz_enumerate`], not yet freed.
void hz_list_free(struct HzFactorizationList *list);

// Braid orbits of a 4-point type. Writes up to `capacity` orbits to
// `orbits` and the total number to `count`; pass `capacity = 0` to query.
//
// # Safety
// `t` must be a live handle; `orbits` must hold `capacity` entries;
// `count` must be writable.
enum HzStatus hz_braid_orbits(const struct HzType *t,
                              struct HzOrbit *orbits,
                              size_t capacity,
                              size_t *count);

// Reduction census of the pure-cycle type `(d; e[0..4])` at the prime `p`.
//
// # Safety
// `e` must point to four values; `out` must be writable.
enum HzStatus hz_reduction_census(size_t p, size_t d, const size_t *e, struct HzCensus *out);

// Tail invariants of a single `e1`-cycle (`e2 == 0`) or a pair `e1-e2` in degree `p`.
//
// # Safety
// `out` must be writable.
enum HzStatus hz_tail_invariants(size_t p, size_t e1, size_t e2, struct HzTail *out);

// The Cartier coefficient `c(λ)` for exponents `a[0..4]`.
//
// # Safety
// `a` must point to four values; `out` must be writable.
enum HzStatus hz_cartier_coefficient(uint64_t p, const uint64_t *a, struct HzPoly **out);

// Roots of `c(λ)` in `F_p \ {0, 1}`: up to `capacity` are written to
// `roots`, the total to `count`.
//
// # Safety
// `a` must point to four values; `roots` must hold `capacity` entries;
// `count` must be writable.
enum HzStatus hz_supersingular_roots(uint64_t p,
                                     const uint64_t *a,
                                     uint64_t *roots,
                                     size_t capacity,
                                     size_t *count);

// Degree, or -1 for the zero polynomial.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum HzStatus hz_poly_degree(const struct HzPoly *poly, int64_t *out);

// Borrow the coefficients (ascending powers); valid while `poly` lives.
//
// # Safety
// `poly` must be a live handle; `coeffs` and `len` must be writable.
enum HzStatus hz_poly_coeffs(const struct HzPoly *poly, const uint64_t **coeffs, size_t *len);

// # Safety
// `poly` must be a live handle; `out` must be writable.
enum HzStatus hz_poly_to_string(const struct HzPoly *poly, char **out);

// # Safety
// `poly` must be NULL or a handle from this library, not yet freed.
void hz_poly_free(struct HzPoly *poly);

// Analyze the group generated by a generator file's contents
// (`degree: n` header, then one permutation per line).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum HzStatus hz_group_analyze(const char *text, struct HzGroupReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HURWITZ_H */
