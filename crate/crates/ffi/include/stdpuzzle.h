/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef STDPUZZLE_H
#define STDPUZZLE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SpStatus {
  SP_STATUS_OK = 0,
  SP_STATUS_NULL_POINTER = 1,
  SP_STATUS_INVALID_UTF8 = 2,
  SP_STATUS_PARSE = 3,
  SP_STATUS_DOMAIN = 4,
  SP_STATUS_OVERFLOW = 5,
  SP_STATUS_OUT_OF_RANGE = 6,
  SP_STATUS_IO = 7,
  SP_STATUS_PANIC = 8,
} SpStatus;

/**
 * Boundary profile of a support at one width.
 */
typedef struct SpProfile SpProfile;

/**
 * A set of pieces.
 */
typedef struct SpSupport SpSupport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never NULL; do not free.
 */
const char *sp_status_message(int status);

/**
 * Copy of the last error message on this thread, or NULL if none.
 */
char *sp_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a pointer returned by this library.
 */
void sp_string_free(char *s);

/**
 * Parses a support literal such as `"BCEG"`.
 *
 * # Safety
 * `literal` must be a NUL-terminated string; `out` must be writable.
 */
enum SpStatus sp_support_parse(const char *literal, struct SpSupport **out);

/**
 * # Safety
 * `support` must be NULL or a handle from this library, freed once.
 */
void sp_support_free(struct SpSupport *support);

/**
 * Number of pieces, or 0 for a NULL handle.
 *
 * # Safety
 * `support` must be NULL or a live handle.
 */
size_t sp_support_len(const struct SpSupport *support);

/**
 * # Safety
 * `support` must be NULL or a live handle.
 */
bool sp_support_is_connected(const struct SpSupport *support);

/**
 * # Safety
 * `support` must be a live handle; `out` must be writable.
 */
enum SpStatus sp_support_name(const struct SpSupport *support, char **out);

/**
 * Class representative under the symmetry group, as a new handle.
 *
 * # Safety
 * `support` must be a live handle; `out` must be writable.
 */
enum SpStatus sp_support_canonical(const struct SpSupport *support, struct SpSupport **out);

/**
 * `|P^n|` as a decimal string.
 *
 * # Safety
 * `support` must be a live handle; `out` must be writable.
 */
enum SpStatus sp_count(const struct SpSupport *support, size_t n, char **out);

/**
 * `|P^n|` as an integer; `SP_STATUS_OVERFLOW` if it exceeds 64 bits.
 *
 * # Safety
 * `support` must be a live handle; `out` must be writable.
 */
enum SpStatus sp_count_u64(const struct SpSupport *support, size_t n, uint64_t *out);

/**
 * # Safety
 * `support` must be a live handle; `out` must be writable.
 */
enum SpStatus sp_profile_new(const struct SpSupport *support, size_t n, struct SpProfile **out);

/**
 * # Safety
 * `profile` must be NULL or a handle from this library, freed once.
 */
void sp_profile_free(struct SpProfile *profile);

/**
 * Number of nonzero cells, or 0 for a NULL handle.
 *
 * # Safety
 * `profile` must be NULL or a live handle.
 */
size_t sp_profile_len(const struct SpProfile *profile);

/**
 * Cell `index` in (X, Y) order. `count` borrows from the handle and stays
 * valid until it is freed.
 *
 * # Safety
 * `profile` must be a live handle; the out pointers must be writable.
 */
enum SpStatus sp_profile_cell(const struct SpProfile *profile,
                              size_t index,
                              uint16_t *top,
                              uint16_t *bottom,
                              const char **count);

/**
 * Sum of all cells; borrows from the handle.
 *
 * # Safety
 * `profile` must be NULL or a live handle.
 */
const char *sp_profile_total(const struct SpProfile *profile);

/**
 * Runs a verification suite (`catalan`, `tangent`, `bceg`, `secant`,
 * `named`, `all`) and returns the reports as JSON. `all_passed` is set to
 * whether every report passed, counting deviations as passes.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; out pointers must be writable.
 */
enum SpStatus sp_verify(const char *suite, size_t n_max, bool *all_passed, char **out_json);

/**
 * Census report of all connected classes of `size` pieces with `terms`
 * terms from n = 2, in `format` (`text`, `json` or `markdown`).
 *
 * # Safety
 * `format` must be a NUL-terminated string; `out` must be writable.
 */
enum SpStatus sp_census(size_t size, size_t terms, const char *format, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STDPUZZLE_H */
