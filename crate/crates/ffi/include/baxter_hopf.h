#ifndef BAXTER_HOPF_H
#define BAXTER_HOPF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BaxStatus {
  BAX_STATUS_OK = 0,
  BAX_STATUS_NULL_POINTER = 1,
  BAX_STATUS_INVALID_INPUT = 2,
  BAX_STATUS_RESOURCE_LIMIT = 3,
  BAX_STATUS_PANIC = 4,
} BaxStatus;

typedef enum BaxKind {
  BAX_KIND_PERM = 0,
  BAX_KIND_TWISTED_BAXTER = 1,
  BAX_KIND_BAXTER = 2,
  BAX_KIND_RECTANGULATION = 3,
} BaxKind;

typedef enum BaxAlgebra {
  BAX_ALGEBRA_MALVENUTO_REUTENAUER = 0,
  BAX_ALGEBRA_TWISTED_BAXTER = 1,
  BAX_ALGEBRA_BAXTER = 2,
  BAX_ALGEBRA_RECTANGULATION = 3,
} BaxAlgebra;

/**
 * Opaque permutation handle.
 */
typedef struct BaxPermutation BaxPermutation;

/**
 * Opaque diagonal rectangulation handle.
 */
typedef struct BaxRectangulation BaxRectangulation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *bax_last_error(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void bax_string_free(char *s);

/**
 * Parses `"2413"`, `"2,4,1,3"` or `"[2,4,1,3]"`.
 *
 * # Safety
 * `s` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BaxStatus bax_perm_parse(const char *s, struct BaxPermutation **out);

/**
 * # Safety
 * `p` must come from this library or be null.
 */
void bax_perm_free(struct BaxPermutation *p);

/**
 * Size of `p`, or 0 when `p` is null.
 *
 * # Safety
 * `p` must be a live handle or null.
 */
size_t bax_perm_len(const struct BaxPermutation *p);

/**
 * One-line word form, comma separated once `n > 9`; `∅` when empty.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum BaxStatus bax_perm_to_string(const struct BaxPermutation *p, char **out);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum BaxStatus bax_perm_is_baxter(const struct BaxPermutation *p, bool *out);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum BaxStatus bax_perm_is_twisted_baxter(const struct BaxPermutation *p, bool *out);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum BaxStatus bax_rho(const struct BaxPermutation *p, struct BaxRectangulation **out);

/**
 * Parses `{"n": .., "rects": [[x1, y1, x2, y2], ..]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BaxStatus bax_rect_parse(const char *json, struct BaxRectangulation **out);

/**
 * # Safety
 * `r` must come from this library or be null.
 */
void bax_rect_free(struct BaxRectangulation *r);

/**
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum BaxStatus bax_rect_to_json(const struct BaxRectangulation *r, char **out);

/**
 * The twisted Baxter permutation `τ(r)`.
 *
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum BaxStatus bax_tau(const struct BaxRectangulation *r, struct BaxPermutation **out);

/**
 * The Baxter permutation `β(r)`.
 *
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum BaxStatus bax_beta(const struct BaxRectangulation *r, struct BaxPermutation **out);

/**
 * `B(n)` in decimal; exact for every `n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BaxStatus bax_baxter_number(size_t n, char **out);

/**
 * Counts objects of size `n` by enumeration.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BaxStatus bax_count(enum BaxKind kind, size_t n, uint64_t *out);

/**
 * Product of two basis elements as a JSON list of `{"key", "coeff"}`.
 * Rectangulation inputs may be JSON or permutations (read through `ρ`).
 *
 * # Safety
 * `a` and `b` must be NUL-terminated strings and `out` a valid pointer.
 */
enum BaxStatus bax_product_json(enum BaxAlgebra algebra, const char *a, const char *b, char **out);

/**
 * Coproduct of a basis element as a JSON list of `{"left", "right", "coeff"}`.
 *
 * # Safety
 * `a` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BaxStatus bax_coproduct_json(enum BaxAlgebra algebra, const char *a, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BAXTER_HOPF_H */
