#ifndef HSYMB_H
#define HSYMB_H

/* Generated by cbindgen from the hsymb-ffi sources; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum HsymbStatus {
  HSYMB_STATUS_OK = 0,
  HSYMB_STATUS_NULL_POINTER = 1,
  HSYMB_STATUS_INVALID_UTF8 = 2,
  HSYMB_STATUS_PARSE = 3,
  HSYMB_STATUS_SORT_MISMATCH = 4,
  HSYMB_STATUS_INVALID_ARGUMENT = 5,
  HSYMB_STATUS_VERIFICATION_FAILED = 6,
  HSYMB_STATUS_INTERNAL = 7,
} HsymbStatus;

typedef enum HsymbSort {
  HSYMB_SORT_H = 0,
  HSYMB_SORT_HBAR = 1,
} HsymbSort;

typedef enum HsymbFormat {
  HSYMB_FORMAT_TEXT = 0,
  HSYMB_FORMAT_LATEX = 1,
  HSYMB_FORMAT_JSON = 2,
} HsymbFormat;

/**
 * Opaque handle to an element of H or Hbar.
 */
typedef struct HsymbElement HsymbElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *hsymb_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *hsymb_version(void);

/**
 * Parse `text` into a new element; `sort` is one of the `HSYMB_SORT_*` values.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum HsymbStatus hsymb_parse(const char *text, int32_t sort, struct HsymbElement **out);

/**
 * Release an element. Null is ignored.
 *
 * # Safety
 * `e` must come from this library and not be freed twice.
 */
void hsymb_element_free(struct HsymbElement *e);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void hsymb_string_free(char *s);

/**
 * The sort of an element.
 *
 * # Safety
 * `e` must be a live element.
 */
enum HsymbStatus hsymb_element_sort(const struct HsymbElement *e, enum HsymbSort *out);

/**
 * Structural equality of two elements.
 *
 * # Safety
 * Both pointers must be live elements; `out` must be valid.
 */
enum HsymbStatus hsymb_element_equal(const struct HsymbElement *a,
                                     const struct HsymbElement *b,
                                     bool *out);

/**
 * Render an element; `format` is one of the `HSYMB_FORMAT_*` values.
 *
 * # Safety
 * `e` must be a live element and `out` a valid pointer.
 */
enum HsymbStatus hsymb_render(const struct HsymbElement *e, int32_t format, char **out);

/**
 * Rewrite inverted symbols, giving an element of H.
 *
 * # Safety
 * `e` must be a live element and `out` a valid pointer.
 */
enum HsymbStatus hsymb_inv(const struct HsymbElement *e, struct HsymbElement **out);

/**
 * Coproduct of an element, rendered.
 *
 * # Safety
 * `e` must be a live element and `out` a valid pointer.
 */
enum HsymbStatus hsymb_coproduct(const struct HsymbElement *e, int32_t format, char **out);

/**
 * Symbol of an element, rendered.
 *
 * # Safety
 * `e` must be a live element and `out` a valid pointer.
 */
enum HsymbStatus hsymb_symbol(const struct HsymbElement *e, int32_t format, char **out);

/**
 * The 1-form `w` of an element, rendered.
 *
 * # Safety
 * `e` must be a live element and `out` a valid pointer.
 */
enum HsymbStatus hsymb_form(const struct HsymbElement *e, int32_t format, char **out);

/**
 * Variation matrix for the weight vector `weights[0..len]`, rendered.
 *
 * # Safety
 * `weights` must point to `len` integers and `out` must be valid.
 */
enum HsymbStatus hsymb_variation_matrix(const uint32_t *weights,
                                        size_t len,
                                        int32_t sort,
                                        int32_t format,
                                        char **out);

/**
 * Run a verification suite (or `"all"`) and write the JSON report.
 * Returns `VerificationFailed` when any case fails; the report is still written.
 *
 * # Safety
 * `suite` must be a NUL-terminated string and `out` a valid pointer.
 */
enum HsymbStatus hsymb_verify(const char *suite,
                              uint32_t max_weight,
                              uint32_t max_depth,
                              uint64_t seed,
                              char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HSYMB_H */
