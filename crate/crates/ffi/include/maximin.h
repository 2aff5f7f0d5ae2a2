#ifndef MAXIMIN_H
#define MAXIMIN_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MaximinExtensionMode {
  MAXIMIN_EXTENSION_MODE_MAXIMIN = 0,
  MAXIMIN_EXTENSION_MODE_EQUILIBRIUM = 1,
} MaximinExtensionMode;

typedef enum MaximinStatus {
  MAXIMIN_STATUS_OK = 0,
  MAXIMIN_STATUS_NULL_POINTER = 1,
  MAXIMIN_STATUS_INVALID_UTF8 = 2,
  MAXIMIN_STATUS_PARSE_ERROR = 3,
  MAXIMIN_STATUS_INVALID_ARGUMENT = 4,
  MAXIMIN_STATUS_PRECONDITION_FAILED = 5,
  /**
   * A verified result did not hold. Indicates a bug.
   */
  MAXIMIN_STATUS_THEOREM_VIOLATION = 6,
  MAXIMIN_STATUS_PANIC = 7,
} MaximinStatus;

/**
 * Opaque game handle.
 */
typedef struct MaximinGame MaximinGame;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *maximin_last_error(void);

/**
 * Parses a game document (see the game file format).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum MaximinStatus maximin_game_from_json(const char *json, struct MaximinGame **out);

/**
 * # Safety
 * `game` must come from this library and not be used afterwards. NULL is ignored.
 */
void maximin_game_free(struct MaximinGame *game);

/**
 * # Safety
 * `game` must be a live handle; `rows` and `cols` must be writable.
 */
enum MaximinStatus maximin_game_shape(const struct MaximinGame *game, size_t *rows, size_t *cols);

/**
 * Canonical game document.
 *
 * # Safety
 * `game` must be a live handle; `out` must be writable.
 */
enum MaximinStatus maximin_game_to_json(const struct MaximinGame *game, char **out);

/**
 * Security level of player 1 or 2 as an exact `"p/q"` string.
 *
 * # Safety
 * `game` must be a live handle; `out` must be writable.
 */
enum MaximinStatus maximin_security_level(const struct MaximinGame *game,
                                          uint32_t player_index,
                                          char **out);

/**
 * Full analysis report as JSON. Returns `TheoremViolation` (with the report
 * still written) if any characterization check fails.
 *
 * # Safety
 * `game` must be a live handle; `out` must be writable.
 */
enum MaximinStatus maximin_analyze_json(const struct MaximinGame *game, char **out);

/**
 * Builds an extension. `params_json` may be NULL for canonical parameters.
 * On success `out_game` receives a new handle and `out_certificate` the
 * certificate JSON; `TheoremViolation` means the certificate failed (both
 * outputs are still written).
 *
 * # Safety
 * `game` must be a live handle, `params_json` NULL or NUL-terminated, and
 * both output pointers writable.
 */
enum MaximinStatus maximin_extend(const struct MaximinGame *game,
                                  enum MaximinExtensionMode mode,
                                  const char *params_json,
                                  struct MaximinGame **out_game,
                                  char **out_certificate);

/**
 * Runs the ordinal 3x3 census. `threads == 0` uses the default pool.
 *
 * # Safety
 * `out` must be writable.
 */
enum MaximinStatus maximin_census_json(uint32_t threads, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. NULL is ignored.
 */
void maximin_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MAXIMIN_H */
