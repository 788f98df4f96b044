#ifndef SYNCIDEAL_H
#define SYNCIDEAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum SiStatus {
  SI_STATUS_OK = 0,
  SI_STATUS_NULL_POINTER = 1,
  SI_STATUS_INVALID_UTF8 = 2,
  SI_STATUS_PARSE = 3,
  SI_STATUS_INVALID_INPUT = 4,
  SI_STATUS_WRONG_KIND = 5,
  SI_STATUS_NOT_SYNCHRONIZING = 6,
  SI_STATUS_NOT_FOUND = 7,
  SI_STATUS_BUDGET_EXCEEDED = 8,
  SI_STATUS_PANIC = 9,
} SiStatus;

/**
 * Opaque (possibly partial) deterministic acceptor.
 */
typedef struct SiAcceptor SiAcceptor;

/**
 * Opaque complete deterministic automaton without initial or final states.
 */
typedef struct SiSemiautomaton SiSemiautomaton;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or an empty string. Valid
 * until the next library call on the same thread.
 */
const char *si_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void si_string_free(char *s);

/**
 * Parses `.aut` text describing a semiautomaton.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SiStatus si_semiautomaton_parse(const char *text, struct SiSemiautomaton **out);

/**
 * # Safety
 * `a` must be null or a handle from this library, not yet freed.
 */
void si_semiautomaton_free(struct SiSemiautomaton *a);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum SiStatus si_semiautomaton_state_count(const struct SiSemiautomaton *a, size_t *out);

/**
 * Canonical `.aut` text; release with [`si_string_free`].
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum SiStatus si_semiautomaton_serialize(const struct SiSemiautomaton *a, char **out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum SiStatus si_is_synchronizing(const struct SiSemiautomaton *a, bool *out);

/**
 * Shortlex-least shortest reset word, rendered with the automaton's
 * symbols. Returns `NotSynchronizing` when there is none.
 *
 * # Safety
 * `a` must be a live handle; `word` must be writable.
 */
enum SiStatus si_shortest_reset_word(const struct SiSemiautomaton *a, char **word);

/**
 * Parses `.aut` text describing an acceptor.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SiStatus si_acceptor_parse(const char *text, struct SiAcceptor **out);

/**
 * Minimal acceptor of a word list (`alphabet` header, one word per line).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SiStatus si_acceptor_from_words(const char *text, struct SiAcceptor **out);

/**
 * # Safety
 * `d` must be null or a handle from this library, not yet freed.
 */
void si_acceptor_free(struct SiAcceptor *d);

/**
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum SiStatus si_acceptor_state_count(const struct SiAcceptor *d, size_t *out);

/**
 * # Safety
 * `d` must be a live handle; `word` must be a NUL-terminated string;
 * `out` must be writable.
 */
enum SiStatus si_acceptor_accepts(const struct SiAcceptor *d, const char *word, bool *out);

/**
 * Canonical `.aut` text; release with [`si_string_free`].
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum SiStatus si_acceptor_serialize(const struct SiAcceptor *d, char **out);

/**
 * Minimal acceptor of the reset words of `a`.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum SiStatus si_syn_recognizer(const struct SiSemiautomaton *a, struct SiAcceptor **out);

/**
 * Minimal acceptor of the minimal words of the ideal recognized by `ideal`.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum SiStatus si_minimal_words(const struct SiAcceptor *ideal, struct SiAcceptor **out);

/**
 * Shortest length `ell <= max_len` with a word of that length that is a
 * factor of no word of `m`, and the lexicographically least such word.
 * Returns `NotFound` when every word up to `max_len` is a factor.
 *
 * # Safety
 * `m` must be a live handle; `ell` and `witness` must be writable.
 */
enum SiStatus si_missing_factor(const struct SiAcceptor *m,
                                size_t max_len,
                                size_t *ell,
                                char **witness);

/**
 * Tail structure automaton of the ideal generated by the factor-free
 * language `m`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum SiStatus si_construct_tail(const struct SiAcceptor *m, struct SiSemiautomaton **out);

/**
 * Checks that the reset words of `a` are exactly the ideal generated by
 * `m`: exactly when `bound` is 0, otherwise on all words up to `bound`.
 * On a failed check `counterexample` receives the shortlex-least word on
 * which membership differs (null when `ok` is true).
 *
 * # Safety
 * `a` and `m` must be live handles; `ok` and `counterexample` must be
 * writable.
 */
enum SiStatus si_verify(const struct SiSemiautomaton *a,
                        const struct SiAcceptor *m,
                        size_t bound,
                        bool *ok,
                        char **counterexample);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYNCIDEAL_H */
