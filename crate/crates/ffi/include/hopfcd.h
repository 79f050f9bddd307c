#ifndef HOPFCD_H
#define HOPFCD_H

#pragma once

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum HcdStatus {
  HCD_STATUS_OK = 0,
  HCD_STATUS_NULL_POINTER = 1,
  HCD_STATUS_INVALID_UTF8 = 2,
  HCD_STATUS_INVALID_JSON = 3,
  HCD_STATUS_INVALID_ARGUMENT = 4,
  HCD_STATUS_LEVEL_MISMATCH = 5,
  HCD_STATUS_PRECONDITION = 6,
  HCD_STATUS_PANIC = 7,
} HcdStatus;

/**
 * Opaque handle to an exact algebra element.
 */
typedef struct HcdElement HcdElement;

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *hcd_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void hcd_string_free(char *s);

/**
 * Releases an element handle. NULL is ignored.
 *
 * # Safety
 * `e` must come from this library and must not be used afterwards.
 */
void hcd_element_free(struct HcdElement *e);

/**
 * Basis element `e_index` of `A_level`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HcdStatus hcd_element_basis(uint32_t level, uintptr_t index, struct HcdElement **out);

/**
 * Parses a JSON array of `2^level` scalar strings such as `["1", "-1/2", "0", "0"]`.
 *
 * # Safety
 * `json` must be NUL-terminated and `out` a valid pointer.
 */
enum HcdStatus hcd_element_from_json(uint32_t level, const char *json, struct HcdElement **out);

/**
 * Coefficients of `e` as a JSON array of scalar strings.
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum HcdStatus hcd_element_to_json(const struct HcdElement *e, char **out);

/**
 * Level of `e`, or -1 for a NULL handle.
 *
 * # Safety
 * `e` must be NULL or a live handle.
 */
int hcd_element_level(const struct HcdElement *e);

/**
 * Doubling product `x y`.
 *
 * # Safety
 * `x`, `y` must be live handles and `out` a valid pointer.
 */
enum HcdStatus hcd_element_mul(const struct HcdElement *x,
                               const struct HcdElement *y,
                               struct HcdElement **out);

/**
 * Sum `x + y`.
 *
 * # Safety
 * `x`, `y` must be live handles and `out` a valid pointer.
 */
enum HcdStatus hcd_element_add(const struct HcdElement *x,
                               const struct HcdElement *y,
                               struct HcdElement **out);

/**
 * Conjugate of `x`.
 *
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum HcdStatus hcd_element_conj(const struct HcdElement *x, struct HcdElement **out);

/**
 * `(a, b) -> (-b, a)`; requires level >= 1.
 *
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum HcdStatus hcd_element_tilde(const struct HcdElement *x, struct HcdElement **out);

/**
 * Squared norm of `x` as a scalar string.
 *
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum HcdStatus hcd_element_norm_sq(const struct HcdElement *x, char **out);

/**
 * Writes 1 to `out` when `x` is exactly zero, 0 otherwise.
 *
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum HcdStatus hcd_element_is_zero(const struct HcdElement *x, int *out);

/**
 * Verifies a zero-divisor certificate given as JSON. Writes 1 or 0 to
 * `passed` and, when `report` is not NULL, the JSON report.
 *
 * # Safety
 * `json` must be NUL-terminated; `passed` must be valid; `report` may be NULL.
 */
enum HcdStatus hcd_verify_cert(const char *json, int *passed, char **report);

/**
 * Runs a named verification suite. Writes 1 or 0 to `passed` and, when
 * `report` is not NULL, the JSON report.
 *
 * # Safety
 * `name` must be NUL-terminated; `passed` must be valid; `report` may be NULL.
 */
enum HcdStatus hcd_run_suite(const char *name,
                             uint32_t level,
                             uint64_t seed,
                             uint64_t samples,
                             int *passed,
                             char **report);

#endif  /* HOPFCD_H */
