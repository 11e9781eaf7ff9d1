/* zm - moment exponents for the Riemann zeta function and divisor sums over
 * the Gaussian integers.
 *
 * C interface to the zm core. All functions that can fail return a zm_status;
 * ZM_OK is 0. On failure, zm_ctx_last_error(ctx) holds a message until the
 * next call on the same context. Output strings are heap-allocated; release
 * them with zm_string_free. A context is not thread-safe; use one per thread.
 */

#ifndef ZM_H
#define ZM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct zm_ctx zm_ctx;

typedef enum zm_status {
  ZM_OK = 0,
  ZM_ERR_INVALID = 1,    /* malformed value */
  ZM_ERR_PARSE = 2,      /* syntax error in textual input */
  ZM_ERR_DOMAIN = 3,     /* argument outside the operation's domain */
  ZM_ERR_BUDGET = 4,     /* node / memory / factoring budget exhausted */
  ZM_ERR_INFEASIBLE = 5, /* no feasible point within the search budget */
  ZM_ERR_CAPACITY = 6,   /* value does not fit the result type */
  ZM_ERR_UNSUPPORTED = 7,
  ZM_ERR_INTERNAL = 8
} zm_status;

const char* zm_version(void);

zm_ctx* zm_ctx_new(void);
void zm_ctx_free(zm_ctx* ctx);
const char* zm_ctx_last_error(const zm_ctx* ctx);

/* Configuration. Defaults: precision 160 bits, budget 10^6 nodes, depth
 * limit 200, 1 thread, 15 output digits. */
zm_status zm_ctx_set_precision(zm_ctx* ctx, unsigned bits);
zm_status zm_ctx_set_budget(zm_ctx* ctx, uint64_t nodes);
zm_status zm_ctx_set_depth_limit(zm_ctx* ctx, unsigned depth);
zm_status zm_ctx_set_threads(zm_ctx* ctx, int threads);
zm_status zm_ctx_set_digits(zm_ctx* ctx, unsigned digits);

void zm_string_free(char* s);

/* --- Exponent-pair words ------------------------------------------------ */

/* Evaluates a finite word on a base pair "k,l"; *out = "k',l'" exact. */
zm_status zm_word_eval(zm_ctx* ctx, const char* word, const char* base, char** out);

/* Attracting pair of a periodic word, at the context precision;
 * *out = "k,l" in decimal. */
zm_status zm_word_fixpoint(zm_ctx* ctx, const char* word, char** out);

/* Objective spec: "lk" (l/k), "mlk" ((k+l)/k), "cobj" ((4k+4l+2)/k with the
 * C constraint), or "a,b,c,d,e,f[;g,h,i]..." for (ak+bl+c)/(dk+el+f) under
 * constraints gk+hl+i >= 0. Pair argument "k,l" exact; *out = "p/q" or "inf".
 */
zm_status zm_objective_eval(zm_ctx* ctx, const char* objective, const char* pair,
                            char** out);

/* Evaluates an objective at the fixed point of a periodic word; decimal. */
zm_status zm_objective_at_fixpoint(zm_ctx* ctx, const char* objective, const char* word,
                                   char** out);

/* Best-first search for the objective minimum over the exponent-pair set.
 * *out_json = {"value": "p/q", "word": ..., "base": "k,l", "nodes": n}. */
zm_status zm_search(zm_ctx* ctx, const char* objective, char** out_json);

/* --- Moment quantities --------------------------------------------------- */

/* JSON: {"value": "p/q" | null, "approx": "...", "word"?, "base"?, "nodes"?}.
 * witness_word/witness_base may be NULL; when given they replace the search.
 */
zm_status zm_moment_M(zm_ctx* ctx, const char* A, const char* witness_word,
                      const char* witness_base, char** out_json);
zm_status zm_moment_E(zm_ctx* ctx, const char* A, const char* witness_word,
                      const char* witness_base, char** out_json);
zm_status zm_moment_I(zm_ctx* ctx, const char* A, char** out_json);
zm_status zm_const_C(zm_ctx* ctx, char** out_json);
/* {"D": "...", "slope": "...", "f_min": "..."} */
zm_status zm_const_D(zm_ctx* ctx, char** out_json);
/* {"k", "exponent": {...}, "thin": "p/q"} */
zm_status zm_error_exponent(zm_ctx* ctx, unsigned k, char** out_json);

/* --- Gaussian integers --------------------------------------------------- */

zm_status zm_gauss_canonical(zm_ctx* ctx, const char* z, char** out);
zm_status zm_gauss_norm(zm_ctx* ctx, const char* z, char** out);
/* {"unit": "...", "factors": [{"prime": "a+bi", "exp": e}, ...]} */
zm_status zm_gauss_factor(zm_ctx* ctx, const char* z, char** out_json);
zm_status zm_gauss_tau(zm_ctx* ctx, const char* z, unsigned k, char** out);
/* JSON array of canonical divisors. */
zm_status zm_gauss_divisors(zm_ctx* ctx, const char* z, char** out_json);

/* --- Summatory functions and tables -------------------------------------- */

/* method: "auto" | "sieve" | "hyperbola" | "brute". */
zm_status zm_sum(zm_ctx* ctx, unsigned k, uint64_t x, const char* method, uint64_t* out);

/* Prediction x * P_k(ln x) at the context precision, decimal string. */
zm_status zm_predict(zm_ctx* ctx, unsigned k, uint64_t x, char** out);

/* format: "text" | "csv" | "json". id in {1, 2, 3}. */
zm_status zm_table(zm_ctx* ctx, int id, const char* format, char** out);

/* Table 3 over caller-chosen x values. */
zm_status zm_table3_custom(zm_ctx* ctx, const uint64_t* xs, size_t count, unsigned k,
                           const char* method, const char* format, char** out);

/* Constants audit dump (30 significant digits by default). */
zm_status zm_constants(zm_ctx* ctx, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZM_H */
