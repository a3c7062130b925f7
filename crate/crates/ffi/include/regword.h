#ifndef REGWORD_H
#define REGWORD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stdint.h>

typedef enum RegwordStatus {
  REGWORD_STATUS_OK = 0,
  REGWORD_STATUS_NULL_ARGUMENT = 1,
  REGWORD_STATUS_INVALID_UTF8 = 2,
  REGWORD_STATUS_PARSE_ERROR = 3,
  REGWORD_STATUS_GENERATION_FAILED = 4,
  REGWORD_STATUS_PANIC = 5,
} RegwordStatus;

// Opaque regexp handle.
typedef struct RegwordRegexp RegwordRegexp;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a pattern in surface syntax, e.g. `(a U b)*a`.
//
// # Safety
// `pattern` must be a NUL-terminated string; `out` must be writable.
enum RegwordStatus regword_parse(const char *pattern, struct RegwordRegexp **out);

// Parses a pattern in AST form, e.g. `(star (sing "a"))`.
//
// # Safety
// `ast` must be a NUL-terminated string; `out` must be writable.
enum RegwordStatus regword_parse_ast(const char *ast, struct RegwordRegexp **out);

// # Safety
// `re` must be null or a handle not yet freed.
void regword_regexp_free(struct RegwordRegexp *re);

// # Safety
// `s` must be null or a string returned by this library and not yet freed.
void regword_string_free(char *s);

// Message for the last failure on this thread, or null. Valid until the
// next call into this library on the same thread.
const char *regword_last_error(void);

// # Safety
// `re` must be a live handle; `out` must be writable.
enum RegwordStatus regword_render(const struct RegwordRegexp *re, char **out);

// # Safety
// `re` must be a live handle; `out` must be writable.
enum RegwordStatus regword_render_ast(const struct RegwordRegexp *re, char **out);

// Generates one word. The empty word comes back as `""`.
//
// # Safety
// `re` must be a live handle; `out` must be writable.
enum RegwordStatus regword_gen_word(const struct RegwordRegexp *re,
                                    uint64_t seed,
                                    uint32_t max_star_reps,
                                    char **out);

// Tests membership. `""` and `"ε"` denote the empty word; a word with a
// character outside the alphabet is never a member.
//
// # Safety
// `re` must be a live handle; `word` a NUL-terminated string; `out` writable.
enum RegwordStatus regword_member(const struct RegwordRegexp *re, const char *word, bool *out);

// Every word of length at most `max_len`, one per line in shortlex order,
// each terminated by `\n`. The empty word is written as `ε`.
//
// # Safety
// `re` must be a live handle; `out` must be writable.
enum RegwordStatus regword_enumerate(const struct RegwordRegexp *re, uint32_t max_len, char **out);

// # Safety
// `out` must be writable.
enum RegwordStatus regword_generate_password(uint64_t seed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* REGWORD_H */
