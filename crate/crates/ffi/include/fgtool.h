#ifndef FGTOOL_H
#define FGTOOL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FgStatus {
  FG_STATUS_OK = 0,
  FG_STATUS_NULL_POINTER = 1,
  FG_STATUS_INVALID_UTF8 = 2,
  /**
   * Input text does not follow the line grammar.
   */
  FG_STATUS_PARSE = 3,
  /**
   * Well-formed input that violates a structural requirement.
   */
  FG_STATUS_INVALID = 4,
  FG_STATUS_DISCONNECTED = 5,
  /**
   * Unknown basepoint or a characteristic that is not 0 or prime.
   */
  FG_STATUS_BAD_ARGUMENT = 6,
  /**
   * A hom count would exceed the budget.
   */
  FG_STATUS_BUDGET = 7,
  /**
   * Buffer passed by the caller is too small; the needed length is
   * still reported.
   */
  FG_STATUS_BUFFER_TOO_SMALL = 8,
  FG_STATUS_PANIC = 9,
} FgStatus;

typedef struct FgComplex FgComplex;

typedef struct FgPoset FgPoset;

typedef struct FgPresentation FgPresentation;

typedef struct FgQuiver FgQuiver;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next failing call on the same thread; do not free.
 */
const char *fg_last_error_message(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void fg_string_free(char *s);

/**
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum FgStatus fg_complex_parse(const char *text_in, bool close_down, struct FgComplex **out);

/**
 * # Safety
 * `c` must come from this library or be null.
 */
void fg_complex_free(struct FgComplex *c);

/**
 * Canonical text form of the complex.
 *
 * # Safety
 * Pointers must be valid; the string is freed with `fg_string_free`.
 */
enum FgStatus fg_complex_to_string(const struct FgComplex *c, char **out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum FgStatus fg_complex_barycentric(const struct FgComplex *c, struct FgComplex **out);

/**
 * Edge-path group. A null `basepoint` picks the least vertex.
 *
 * # Safety
 * Pointers must be valid; `basepoint` may be null.
 */
enum FgStatus fg_complex_pi1(const struct FgComplex *c,
                             const char *basepoint,
                             struct FgPresentation **out);

/**
 * `H₁(C, ℤ)`: free rank and torsion coefficients. `torsion_len` always
 * receives the number of coefficients.
 *
 * # Safety
 * `torsion` must have room for `cap` values (it may be null when `cap` is 0).
 */
enum FgStatus fg_complex_h1(const struct FgComplex *c,
                            size_t *rank,
                            uint64_t *torsion,
                            size_t cap,
                            size_t *torsion_len);

/**
 * `dim H¹(C, k)` for `k` of the given characteristic (0 or prime).
 *
 * # Safety
 * Pointers must be valid.
 */
enum FgStatus fg_complex_h1_dim(const struct FgComplex *c, uint64_t characteristic, size_t *out);

/**
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum FgStatus fg_poset_parse(const char *text_in, struct FgPoset **out);

/**
 * # Safety
 * `p` must come from this library or be null.
 */
void fg_poset_free(struct FgPoset *p);

/**
 * # Safety
 * Pointers must be valid; the string is freed with `fg_string_free`.
 */
enum FgStatus fg_poset_to_string(const struct FgPoset *p, char **out);

/**
 * Hasse quiver of the poset.
 *
 * # Safety
 * Pointers must be valid.
 */
enum FgStatus fg_poset_hasse(const struct FgPoset *p, struct FgQuiver **out);

/**
 * `Π₁` of the Hasse quiver, based at the least element.
 *
 * # Safety
 * Pointers must be valid.
 */
enum FgStatus fg_poset_pi1(const struct FgPoset *p, struct FgPresentation **out);

/**
 * `dim HH¹` of the incidence algebra over a field of the given
 * characteristic.
 *
 * # Safety
 * Pointers must be valid.
 */
enum FgStatus fg_poset_hh1(const struct FgPoset *p, uint64_t characteristic, size_t *out);

/**
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum FgStatus fg_quiver_parse(const char *text_in, struct FgQuiver **out);

/**
 * # Safety
 * `q` must come from this library or be null.
 */
void fg_quiver_free(struct FgQuiver *q);

/**
 * # Safety
 * Pointers must be valid; the string is freed with `fg_string_free`.
 */
enum FgStatus fg_quiver_to_string(const struct FgQuiver *q, char **out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum FgStatus fg_quiver_complete(const struct FgQuiver *q, struct FgQuiver **out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum FgStatus fg_quiver_order(const struct FgQuiver *q, struct FgQuiver **out);

/**
 * `Π₁(Q, I_Q)`. A null `basepoint` picks the least vertex.
 *
 * # Safety
 * Pointers must be valid; `basepoint` may be null.
 */
enum FgStatus fg_quiver_pi1(const struct FgQuiver *q,
                            const char *basepoint,
                            struct FgPresentation **out);

/**
 * Van Kampen assembly of `Π₁(Q)` from pieces `q1`, `q2`.
 *
 * # Safety
 * Pointers must be valid; `basepoint` may be null.
 */
enum FgStatus fg_van_kampen(const struct FgQuiver *q,
                            const struct FgQuiver *q1,
                            const struct FgQuiver *q2,
                            const char *basepoint,
                            struct FgPresentation **out);

/**
 * # Safety
 * `p` must come from this library or be null.
 */
void fg_presentation_free(struct FgPresentation *p);

/**
 * # Safety
 * `p` must be a valid handle.
 */
size_t fg_presentation_num_generators(const struct FgPresentation *p);

/**
 * # Safety
 * `p` must be a valid handle.
 */
size_t fg_presentation_num_relators(const struct FgPresentation *p);

/**
 * Tietze-simplified copy.
 *
 * # Safety
 * Pointers must be valid.
 */
enum FgStatus fg_presentation_simplify(const struct FgPresentation *p, struct FgPresentation **out);

/**
 * Abelianization: free rank and torsion coefficients.
 *
 * # Safety
 * `torsion` must have room for `cap` values (it may be null when `cap` is 0).
 */
enum FgStatus fg_presentation_abelianization(const struct FgPresentation *p,
                                             size_t *rank,
                                             uint64_t *torsion,
                                             size_t cap,
                                             size_t *torsion_len);

/**
 * `gens:` / `rel:` lines, followed by the invariant block when
 * `with_invariants` is set.
 *
 * # Safety
 * Pointers must be valid; the string is freed with `fg_string_free`.
 */
enum FgStatus fg_presentation_to_string(const struct FgPresentation *p,
                                        bool with_invariants,
                                        char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* FGTOOL_H */
