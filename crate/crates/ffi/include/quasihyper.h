#ifndef QUASIHYPER_H
#define QUASIHYPER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum QhStatus {
  QH_STATUS_OK = 0,
  QH_STATUS_VERIFICATION_FAILED = 1,
  QH_STATUS_INPUT_ERROR = 2,
  QH_STATUS_RESOURCE_BOUND = 3,
  QH_STATUS_PRECONDITION = 4,
  QH_STATUS_NULL_POINTER = 5,
  QH_STATUS_INTERNAL = 6,
} QhStatus;

typedef enum QhCheck {
  QH_CHECK_COROLLARY = 0,
  QH_CHECK_BAER = 1,
  QH_CHECK_REMARK4 = 2,
  QH_CHECK_LEMMA_A = 3,
  QH_CHECK_COMPARE_NCA = 4,
} QhCheck;

/**
 * A class of groups, made from a selector string.
 */
typedef struct QhClass QhClass;

/**
 * A list of named groups.
 */
typedef struct QhCorpus QhCorpus;

/**
 * A permutation group.
 */
typedef struct QhGroup QhGroup;

/**
 * Size limits; see [`qh_bounds_default`].
 */
typedef struct QhBounds {
  uint64_t enumeration;
  uint64_t lattice;
  uint64_t semidirect;
} QhBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

struct QhBounds qh_bounds_default(void);

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *qh_last_error_message(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qh_string_free(char *s);

/**
 * Builds a group from `n_gens` generators, each given as `degree` images
 * laid out consecutively in `images`.
 *
 * # Safety
 * `images` must point to `n_gens * degree` readable values (it may be null
 * when `n_gens` is 0); `out` must be writable.
 */
enum QhStatus qh_group_from_generators(uintptr_t degree,
                                       const uint32_t *images,
                                       uintptr_t n_gens,
                                       struct QhGroup **out);

/**
 * Parses group definition text (`degree N` then one cycle-notation
 * generator per line).
 *
 * # Safety
 * `text_in` must be a NUL-terminated string; `out` must be writable.
 */
enum QhStatus qh_group_parse(const char *text_in, struct QhGroup **out);

/**
 * # Safety
 * `g` must be null or a live handle from this library.
 */
void qh_group_free(struct QhGroup *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum QhStatus qh_group_order(const struct QhGroup *g, uint64_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum QhStatus qh_group_degree(const struct QhGroup *g, uintptr_t *out);

/**
 * Membership of the permutation with the given `degree` images.
 *
 * # Safety
 * `g` must be a live handle, `images` must point to `degree` values and
 * `out` must be writable.
 */
enum QhStatus qh_group_contains(const struct QhGroup *g,
                                const uint32_t *images,
                                uintptr_t degree,
                                bool *out);

/**
 * The group in definition-file format. Free with [`qh_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum QhStatus qh_group_emit(const struct QhGroup *g, char **out);

/**
 * Selectors: `N`, `Np:<prime>`, `N*`, `Nca`, `abelian`, `all`.
 *
 * # Safety
 * `selector` must be NUL-terminated; `out` must be writable.
 */
enum QhStatus qh_class_parse(const char *selector, struct QhClass **out);

/**
 * # Safety
 * `c` must be null or a live handle from this library.
 */
void qh_class_free(struct QhClass *c);

/**
 * # Safety
 * Handles must be live; `bounds` may be null for the defaults; `out`
 * must be writable.
 */
enum QhStatus qh_class_contains(const struct QhClass *c,
                                const struct QhGroup *g,
                                const struct QhBounds *bounds,
                                bool *out);

/**
 * `Z_X(G)` as a new group handle.
 *
 * # Safety
 * Handles must be live; `bounds` may be null; `out` must be writable.
 */
enum QhStatus qh_hypercenter(const struct QhGroup *g,
                             const struct QhClass *c,
                             const struct QhBounds *bounds,
                             struct QhGroup **out);

/**
 * Intersection of the `X`-maximal subgroups, as a new group handle.
 *
 * # Safety
 * Handles must be live; `bounds` may be null; `out` must be writable.
 */
enum QhStatus qh_intersection(const struct QhGroup *g,
                              const struct QhClass *c,
                              const struct QhBounds *bounds,
                              struct QhGroup **out);

/**
 * # Safety
 * `g` must be live; `bounds` may be null; `out` must be writable.
 */
enum QhStatus qh_inner_induction_hypercenter(const struct QhGroup *g,
                                             const struct QhBounds *bounds,
                                             struct QhGroup **out);

/**
 * # Safety
 * `g` must be live; `out` must be writable.
 */
enum QhStatus qh_is_nilpotent(const struct QhGroup *g, bool *out);

/**
 * # Safety
 * `g` must be live; `bounds` may be null; `out` must be writable.
 */
enum QhStatus qh_is_quasinilpotent(const struct QhGroup *g,
                                   const struct QhBounds *bounds,
                                   bool *out);

/**
 * # Safety
 * `g` must be live; `bounds` may be null; `out` must be writable.
 */
enum QhStatus qh_is_nca_member(const struct QhGroup *g, const struct QhBounds *bounds, bool *out);

/**
 * Built-in corpus: `smoke`, `standard` or `extended`.
 *
 * # Safety
 * `name` must be NUL-terminated; `out` must be writable.
 */
enum QhStatus qh_corpus_builtin(const char *name, struct QhCorpus **out);

/**
 * # Safety
 * `c` must be null or a live handle from this library.
 */
void qh_corpus_free(struct QhCorpus *c);

/**
 * # Safety
 * `c` must be live; `out` must be writable.
 */
enum QhStatus qh_corpus_len(const struct QhCorpus *c, uintptr_t *out);

/**
 * A new handle for the `index`-th group.
 *
 * # Safety
 * `c` must be live; `out` must be writable.
 */
enum QhStatus qh_corpus_group(const struct QhCorpus *c, uintptr_t index, struct QhGroup **out);

/**
 * Id of the `index`-th group. Free with [`qh_string_free`].
 *
 * # Safety
 * `c` must be live; `out` must be writable.
 */
enum QhStatus qh_corpus_id(const struct QhCorpus *c, uintptr_t index, char **out);

/**
 * Runs a verification check over the corpus and writes the reports as
 * JSON lines (free with [`qh_string_free`]). `f_class` picks `F` for the
 * corollary and containment checks and may be null for `N`.
 *
 * A group that could not be computed makes the status `ResourceBound`
 * (or `InputError`); otherwise a failed check gives `VerificationFailed`.
 * The reports are written either way.
 *
 * # Safety
 * `corpus` must be live; `f_class` and `bounds` may be null; `out`
 * must be writable.
 */
enum QhStatus qh_verify(enum QhCheck check,
                        const struct QhCorpus *corpus,
                        const struct QhClass *f_class,
                        const struct QhBounds *bounds,
                        char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUASIHYPER_H */
