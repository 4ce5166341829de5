#ifndef LEIBKIT_H
#define LEIBKIT_H

/* Generated by cbindgen from leibkit-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LeibkitStatus {
  LEIBKIT_OK = 0,
  /**
   * A queried predicate is false.
   */
  LEIBKIT_FALSE = 1,
  LEIBKIT_INPUT_ERROR = 2,
  /**
   * A verdict could not be decided.
   */
  LEIBKIT_UNDECIDED = 3,
  LEIBKIT_NULL_POINTER = 4,
  LEIBKIT_INTERNAL = 5,
} LeibkitStatus;

/**
 * Opaque handle to a validated algebra.
 */
typedef struct LeibkitAlgebra LeibkitAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or null. The pointer stays
 * valid until the next call into this library on the same thread.
 */
const char *leibkit_last_error(void);

/**
 * Parses an algebra file given as a JSON string.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum LeibkitStatus leibkit_algebra_from_json(const char *json,
                                             bool validate,
                                             struct LeibkitAlgebra **out);

/**
 * Named entry of the built-in catalog.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum LeibkitStatus leibkit_catalog_entry(const char *name, struct LeibkitAlgebra **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `a` must be null or a handle not yet freed.
 */
void leibkit_algebra_free(struct LeibkitAlgebra *a);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void leibkit_string_free(char *s);

/**
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum LeibkitStatus leibkit_algebra_dim(const struct LeibkitAlgebra *a, size_t *out);

/**
 * Serializes the algebra in the file format.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum LeibkitStatus leibkit_algebra_to_json(const struct LeibkitAlgebra *a, char **out);

/**
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum LeibkitStatus leibkit_derivation_dim(const struct LeibkitAlgebra *a, size_t *out);

/**
 * Returns `LEIBKIT_OK` when complete and `LEIBKIT_FALSE` otherwise.
 *
 * # Safety
 * `a` must be a live handle.
 */
enum LeibkitStatus leibkit_is_complete(const struct LeibkitAlgebra *a);

/**
 * Machine-format analysis report. With `strict`, returns `LEIBKIT_UNDECIDED`
 * (still writing the report) when any verdict is undecided.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum LeibkitStatus leibkit_analyze(const struct LeibkitAlgebra *a,
                                   bool skip_hol,
                                   bool strict,
                                   char **out);

/**
 * `hol(A)` on the basis `(e_1..e_n, D_1..D_d)`.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum LeibkitStatus leibkit_holomorph(const struct LeibkitAlgebra *a, struct LeibkitAlgebra **out);

/**
 * Same algebra in the seeded random basis; seed 0 is the identity change.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum LeibkitStatus leibkit_basis_change(const struct LeibkitAlgebra *a,
                                        uint64_t seed,
                                        struct LeibkitAlgebra **out);

/**
 * Tests whether the span of the generator expressions is a characteristic ideal.
 * Returns `LEIBKIT_OK` if so and `LEIBKIT_FALSE` otherwise.
 *
 * # Safety
 * `a` must be a live handle and `exprs` must point to `count` NUL-terminated strings.
 */
enum LeibkitStatus leibkit_check_ideal(const struct LeibkitAlgebra *a,
                                       const char *const *exprs,
                                       size_t count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEIBKIT_H */
