#ifndef HPI_H
#define HPI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes; values from 3 upwards match the `hpi` exit statuses.
 */
typedef enum {
  HPI_STATUS_OK = 0,
  HPI_STATUS_NULL_POINTER = 1,
  HPI_STATUS_INVALID_STRING = 2,
  HPI_STATUS_SCHEMA = 3,
  HPI_STATUS_IO = 4,
  HPI_STATUS_FIELD = 5,
  HPI_STATUS_AXIOM_VIOLATION = 6,
  HPI_STATUS_RELATION_VIOLATION = 7,
  HPI_STATUS_NOT_MULTIPLICATIVE = 8,
  HPI_STATUS_PRECONDITION = 9,
  HPI_STATUS_NOT_UNITAL = 10,
  HPI_STATUS_FIELD_TOO_SMALL = 11,
  HPI_STATUS_DECOMPOSITION = 12,
  HPI_STATUS_RESOURCE_CAP = 13,
  HPI_STATUS_TIME_BUDGET = 14,
  HPI_STATUS_INTERNAL = 15,
  HPI_STATUS_PANIC = 16,
} HpiStatus;

/**
 * A parsed algebra with its action.
 */
typedef struct HpiAction HpiAction;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next call on this thread.
 */
const char *hpi_last_error(void);

/**
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
HpiStatus hpi_action_from_json(const char *json, HpiAction **out);

/**
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
HpiStatus hpi_action_from_catalog(const char *name, HpiAction **out);

/**
 * # Safety
 * `action` must come from an `hpi_action_from_*` call and not be freed twice; null is ignored.
 */
void hpi_action_free(HpiAction *action);

/**
 * # Safety
 * `action` must be a live handle and `out` a valid pointer.
 */
HpiStatus hpi_action_dim(const HpiAction *action, size_t *out);

/**
 * Verifies the action axioms and any declared Hopf relations.
 *
 * # Safety
 * `action` must be a live handle.
 */
HpiStatus hpi_check(const HpiAction *action);

/**
 * Dimensions of the Jacobson radical and the H-radical.
 *
 * # Safety
 * `action` must be a live handle; `jacobson` and `h_rad` valid pointers.
 */
HpiStatus hpi_radical_dims(const HpiAction *action, size_t *jacobson, size_t *h_rad);

/**
 * The exponent `d`; `nilpotent` is set and `d` is 0 for nilpotent algebras.
 *
 * # Safety
 * `action` must be a live handle; `d` and `nilpotent` valid pointers.
 */
HpiStatus hpi_exponent(const HpiAction *action, size_t *d, bool *nilpotent);

/**
 * `c_n` with the given row cap (0 selects the default) and thread count (0 uses all cores).
 *
 * # Safety
 * `action` must be a live handle and `out` a valid pointer.
 */
HpiStatus hpi_codimension(const HpiAction *action,
                          size_t n,
                          uint64_t row_cap,
                          size_t threads,
                          size_t *out);

/**
 * JSON codimension table for `n = 1..=n_max` with `d`.
 *
 * # Safety
 * `action` must be a live handle and `out` a valid pointer; free the result with `hpi_string_free`.
 */
HpiStatus hpi_exponent_report_json(const HpiAction *action, size_t n_max, char **out);

/**
 * Canonical JSON of the document behind a handle.
 *
 * # Safety
 * `action` must be a live handle and `out` a valid pointer; free the result with `hpi_string_free`.
 */
HpiStatus hpi_action_to_json(const HpiAction *action, char **out);

/**
 * # Safety
 * `s` must come from this library and not be freed twice; null is ignored.
 */
void hpi_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HPI_H */
