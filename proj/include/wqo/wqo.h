/* C interface to the wqo library: quasi-orders, tree and sequence
 * embeddability, ordinal invariants, epsilon-term comparison, and the
 * randomized property suites.
 *
 * Conventions: every function returns a wqo_status; results go through
 * out-parameters. On any non-OK status the out-parameters are untouched
 * and wqo_last_error() describes the failure (thread-local). Strings
 * returned through char** are heap-allocated; release them with
 * wqo_string_free().
 */
#ifndef WQO_WQO_H
#define WQO_WQO_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wqo_status {
  WQO_OK = 0,
  WQO_EPARSE = 1, /* malformed input text */
  WQO_EINVAL = 2, /* precondition violated (bad label, decomposable input, ...) */
  WQO_ELIMIT = 3  /* size cap exceeded */
} wqo_status;

/* Opaque finite quasi-order handle. */
typedef struct wqo_qo wqo_qo;

/* Message for the most recent failure on this thread; never NULL. */
const char* wqo_last_error(void);
void wqo_string_free(char* s);

/* From the line-based text format: `elem NAME` / `le NAME NAME`. */
wqo_status wqo_qo_open_text(const char* text, wqo_qo** out);
/* Builtins: "1", "chainN", "antiN". */
wqo_status wqo_qo_open_builtin(const char* name, wqo_qo** out);
void wqo_qo_close(wqo_qo* q);

/* Multi-line summary: size, equivalence classes, otype, height, width. */
wqo_status wqo_qo_stats(const wqo_qo* q, char** out);

/* result = 1 iff tree1 <= tree2 (homomorphism order, or Kruskal order
 * when kruskal != 0). Tree syntax: leaf labels, `(T1, T2, ...)`,
 * spine sugar `label^k`. */
wqo_status wqo_tree_cmp(const wqo_qo* q, const char* tree1, const char* tree2,
                        int kruskal, int* result);

/* result = 1 iff seq1 embeds into seq2. Sequence syntax: labels, `+`,
 * `(E)^w`, `(E)^k`. */
wqo_status wqo_seq_cmp(const wqo_qo* q, const char* seq1, const char* seq2,
                       int* result);

/* direction: "tree2seq" or "seq2tree" (the latter requires an
 * indecomposable sequence). *out is the printed image. */
wqo_status wqo_convert(const wqo_qo* q, const char* direction, const char* expr,
                       char** out);

/* target: "qo" (finite order type, decimal), or "tf"/"seq" (symbolic
 * maximal order type of trees/sequences over q: `0`, `w`, or `e_<CNF>`). */
wqo_status wqo_otype(const wqo_qo* q, const char* target, char** out);

/* Compare two epsilon-notation terms over an index chain of length
 * omega. result in {-1, 0, 1}. Term syntax: `0`, `w`, `e(i)`,
 * `<t0, t1, ...>`. */
wqo_status wqo_eps_cmp(unsigned omega, const char* term1, const char* term2,
                       int* result);

/* Printed tree image of the term under the order-reflecting map into
 * trees labelled 0 < 1 < e0 < e1 < ... */
wqo_status wqo_eps_to_tree(unsigned omega, const char* term, char** out);

/* suite: "trees" | "sequences" | "correspondence" | "epsilon".
 * *passed = 1 iff every case passed; *report is the full text report
 * (failure lines followed by an `ok/total ok` summary). */
wqo_status wqo_run_check(const char* suite, uint64_t seed, int cases,
                         int max_size, unsigned omega, int* passed,
                         char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WQO_WQO_H */
