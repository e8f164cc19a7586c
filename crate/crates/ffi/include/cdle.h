#ifndef CDLE_H
#define CDLE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdint.h>

#define CDLE_OK 0

// Some definition failed to check; see `cdle_session_last_error`.
#define CDLE_ERR_TYPE 1

#define CDLE_ERR_NULL -1

#define CDLE_ERR_UTF8 -2

#define CDLE_ERR_IO -3

#define CDLE_ERR_PARSE -4

#define CDLE_ERR_UNKNOWN_NAME -5

#define CDLE_ERR_FUEL -6

#define CDLE_ERR_PANIC -7

// A checking session: definitions loaded so far plus the last error.
typedef struct CdleSession CdleSession;

// Creates an empty session; `max_steps` 0 selects the default fuel.
struct CdleSession *cdle_session_new(uint64_t max_steps);

// Creates a session with the bundled corpus loaded, or null on failure.
struct CdleSession *cdle_corpus_session_new(uint64_t max_steps);

// `session` must be null or a handle from this library, not yet freed.
void cdle_session_free(struct CdleSession *session);

// Checks a module given as text. Imports are resolved under `root`
// (may be null, meaning imports are unavailable).
// `session` must be a live handle; string arguments must be null or
// NUL-terminated.
int32_t cdle_session_load_source(struct CdleSession *session,
                                 const char *label,
                                 const char *source,
                                 const char *root);

// Checks a file; imports resolve next to it, or under `root` if non-null.
// Pointer requirements as for `cdle_session_load_source`.
int32_t cdle_session_load_file(struct CdleSession *session, const char *path, const char *root);

// Number of definitions that failed to check so far.
// `session` must be null or a live handle.
int64_t cdle_session_failure_count(const struct CdleSession *session);

// The message of the last failed call on this session, or null. Owned
// by the session; valid until the next call on it.
// `session` must be null or a live handle.
const char *cdle_session_last_error(const struct CdleSession *session);

// Writes the βη-normal erasure of `name`, pretty-printed, to `*out`.
// `session` must be a live handle, `name` NUL-terminated, `out` writable.
int32_t cdle_erase(struct CdleSession *session, const char *name, char **out);

// Sets `*equal` to 1 if the erasures of `a` and `b` are βη-equal, else 0.
// `session` must be a live handle, names NUL-terminated, `equal` writable.
int32_t cdle_eq(struct CdleSession *session, const char *a, const char *b, int32_t *equal);

// Releases a string returned by this library.
// `s` must be null or a string from this library, not yet freed.
void cdle_string_free(char *s);

#endif  /* CDLE_H */
