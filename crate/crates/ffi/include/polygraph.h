#ifndef POLYGRAPH_H
#define POLYGRAPH_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum PgStatus {
  PG_STATUS_OK = 0,
  PG_STATUS_NULL_POINTER = 1,
  PG_STATUS_INVALID_UTF8 = 2,
  /**
   * Graph text, word or element failed to parse.
   */
  PG_STATUS_PARSE = 3,
  PG_STATUS_NOT_DIVISIBLE = 4,
  PG_STATUS_NO_COMMON_MULTIPLE = 5,
  /**
   * The operation is undefined on the zero element.
   */
  PG_STATUS_ZERO_INPUT = 6,
  /**
   * The operation needs every component to be monogenic.
   */
  PG_STATUS_NOT_MONOGENIC = 7,
  PG_STATUS_GRAPH_MISMATCH = 8,
  PG_STATUS_PANIC = 9,
} PgStatus;

/**
 * An element of the graph product.
 */
typedef struct PgElement PgElement;

/**
 * An element of the inverse hull with zero.
 */
typedef struct PgHull PgHull;

/**
 * A graph together with its component declarations.
 */
typedef struct PgProduct PgProduct;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *pg_last_error(void);

/**
 * # Safety
 * `s` is null or a string returned by this library, not yet freed.
 */
void pg_string_free(char *s);

/**
 * Parses a graph description.
 *
 * # Safety
 * `text` is a nul-terminated string; `out` is writable.
 */
enum PgStatus pg_product_parse(const char *text_, struct PgProduct **out);

/**
 * # Safety
 * `p` is null or a live handle.
 */
void pg_product_free(struct PgProduct *p);

/**
 * Parses a positive word such as `x1 x2^3` into its normal form.
 *
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_element_parse(const struct PgProduct *p, const char *word, struct PgElement **out);

/**
 * # Safety
 * `e` is null or a live handle.
 */
void pg_element_free(struct PgElement *e);

/**
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_element_to_string(const struct PgElement *e, char **out);

/**
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_element_equal(const struct PgElement *a, const struct PgElement *b, bool *out);

/**
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_element_multiply(const struct PgElement *a,
                                  const struct PgElement *b,
                                  struct PgElement **out);

/**
 * The `b` with `a = b·c`, or [`PgStatus::NotDivisible`].
 *
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_element_right_divide(const struct PgElement *a,
                                      const struct PgElement *c,
                                      struct PgElement **out);

/**
 * Least common left multiple `m = s·b = t·c`. `out_s` and `out_t` may be
 * null.
 *
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_element_lclm(const struct PgElement *b,
                              const struct PgElement *c,
                              struct PgElement **out_m,
                              struct PgElement **out_s,
                              struct PgElement **out_t);

/**
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_element_hclf(const struct PgElement *a,
                              const struct PgElement *b,
                              struct PgElement **out);

/**
 * Parses `0` or `[a | b]`.
 *
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_hull_parse(const struct PgProduct *p, const char *s, struct PgHull **out);

/**
 * Evaluates a signed word such as `x1 x2^-1`.
 *
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_hull_eval(const struct PgProduct *p, const char *word, struct PgHull **out);

/**
 * # Safety
 * `s` is null or a live handle.
 */
void pg_hull_free(struct PgHull *s);

/**
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_hull_to_string(const struct PgHull *s, char **out);

/**
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_hull_multiply(const struct PgHull *s, const struct PgHull *t, struct PgHull **out);

/**
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_hull_inverse(const struct PgHull *s, struct PgHull **out);

/**
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_hull_natural_le(const struct PgHull *s, const struct PgHull *t, bool *out);

/**
 * Maximal element above a nonzero element, or [`PgStatus::ZeroInput`].
 *
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_hull_max_above(const struct PgHull *s, struct PgHull **out);

/**
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_hull_is_idempotent(const struct PgHull *s, bool *out);

/**
 * Image of a hull element in the graph group with zero: `0`, `1` or a
 * reduced signed word.
 *
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_hull_eta(const struct PgHull *s, char **out);

/**
 * Reduced canonical form of a signed word in the graph group.
 *
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_group_normal_form(const struct PgProduct *p, const char *word, char **out);

/**
 * Defining relations, one per line.
 *
 * # Safety
 * Pointers are valid as documented at the crate level.
 */
enum PgStatus pg_presentation(const struct PgProduct *p, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYGRAPH_H */
