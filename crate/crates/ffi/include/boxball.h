#ifndef BOXBALL_H
#define BOXBALL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BbAlgorithm {
  BB_ALGORITHM_ORIGINAL = 0,
  BB_ALGORITHM_CARRIER = 1,
} BbAlgorithm;

typedef enum BbNotation {
  BB_NOTATION_COMPACT = 0,
  BB_NOTATION_WALLED = 1,
} BbNotation;

typedef enum BbStatus {
  BB_STATUS_OK = 0,
  BB_STATUS_NULL_ARGUMENT = 1,
  BB_STATUS_INVALID_UTF8 = 2,
  BB_STATUS_PARSE = 3,
  BB_STATUS_INVALID_STATE = 4,
  BB_STATUS_EMPTY_STATE = 5,
  BB_STATUS_NOTATION = 6,
  BB_STATUS_PANIC = 7,
} BbStatus;

typedef struct BbState BbState;

typedef struct BbTableau BbTableau;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until
// the next failing call on the same thread.
const char *bb_last_error(void);

// Parses a state in compact or walled notation. `colors == 0` takes the
// largest color present.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum BbStatus bb_state_parse(const char *text, uint32_t colors, struct BbState **out);

// # Safety
// `state` must be null or a handle from this library, not yet freed.
void bb_state_free(struct BbState *state);

// # Safety
// `state` must be a live handle and `out` a valid pointer.
enum BbStatus bb_state_render(const struct BbState *state, enum BbNotation notation, char **out);

// # Safety
// `state` must be a live handle.
size_t bb_state_ball_count(const struct BbState *state);

// Evolves `steps` time steps.
//
// # Safety
// `state` must be a live handle and `out` a valid pointer.
enum BbStatus bb_state_evolve(const struct BbState *state,
                              size_t steps,
                              enum BbAlgorithm algorithm,
                              struct BbState **out);

// One step backwards in time.
//
// # Safety
// `state` must be a live handle and `out` a valid pointer.
enum BbStatus bb_state_reverse_step(const struct BbState *state, struct BbState **out);

// Whether two states are equal; false if either is null.
//
// # Safety
// Both arguments must be null or live handles.
bool bb_state_equal(const struct BbState *a, const struct BbState *b);

// # Safety
// `state` must be a live handle and `out` a valid pointer.
enum BbStatus bb_state_p_symbol(const struct BbState *state, struct BbTableau **out);

// # Safety
// `state` must be a live handle and `out` a valid pointer.
enum BbStatus bb_state_q_symbol(const struct BbState *state, struct BbTableau **out);

// The Q-symbol one step after `context`, computed from `q` alone and the
// vacant-label carrier of `context`.
//
// # Safety
// `q` and `context` must be live handles and `out` a valid pointer.
enum BbStatus bb_q_evolve(const struct BbTableau *q,
                          const struct BbState *context,
                          struct BbTableau **out);

// Rows separated by newlines, letters by spaces.
//
// # Safety
// `tableau` must be a live handle and `out` a valid pointer.
enum BbStatus bb_tableau_render(const struct BbTableau *tableau, char **out);

// # Safety
// Both arguments must be null or live handles.
bool bb_tableau_equal(const struct BbTableau *a, const struct BbTableau *b);

// # Safety
// `tableau` must be null or a handle from this library, not yet freed.
void bb_tableau_free(struct BbTableau *tableau);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void bb_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOXBALL_H */
