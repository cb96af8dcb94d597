#ifndef HOPF_C_H
#define HOPF_C_H

#include <stddef.h>

#if defined(_WIN32)
#define HOPF_API __declspec(dllexport)
#else
#define HOPF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hopf_status {
  HOPF_OK = 0,
  HOPF_ERR_PARSE = 1,
  HOPF_ERR_DOMAIN = 2,
  HOPF_ERR_INVALID_ARG = 3,
  HOPF_ERR_INTERNAL = 4,
  HOPF_CHECK_FAILED = 5
} hopf_status;

/* Owns the text of the last result and the last error. Not shared between
 * threads; use one context per thread. */
typedef struct hopf_context hopf_context;

HOPF_API hopf_context* hopf_context_new(void);
HOPF_API void hopf_context_free(hopf_context* ctx);

/* Valid until the next call on ctx. Empty strings when unset. */
HOPF_API const char* hopf_output(const hopf_context* ctx);
HOPF_API const char* hopf_last_error(const hopf_context* ctx);
/* Byte offset of the last parse error, or -1. */
HOPF_API long hopf_last_error_offset(const hopf_context* ctx);

HOPF_API const char* hopf_status_string(hopf_status s);

/* algebra: "ck", "gl", "foissy", "planar", "shuffle", "qshuffle", "qsym".
 * Inputs use the tree grammar ("[[],[]]", "f2[f1]", "[] []", "I"), the word
 * grammar ("f1.f2", "1") or compositions ("M(1,2)"). */
HOPF_API hopf_status hopf_coproduct(hopf_context* ctx, const char* algebra, const char* input);
HOPF_API hopf_status hopf_antipode(hopf_context* ctx, const char* algebra, const char* input);
HOPF_API hopf_status hopf_product(hopf_context* ctx, const char* algebra, const char* left, const char* right);

/* kind: "tree", "forest", "planar", "ordered-forest", "word", "bbr".
 * Output is the canonical text of the parsed value. */
HOPF_API hopf_status hopf_parse(hopf_context* ctx, const char* kind, const char* text);

/* Sum of linear-extension words of a labeled forest. */
HOPF_API hopf_status hopf_pi(hopf_context* ctx, const char* forest);

/* Lyndon words of weight <= max_weight, grouped by weight. */
HOPF_API hopf_status hopf_lyndon(hopf_context* ctx, long max_weight);
/* Hall trees with standard decompositions and Hall polynomials.
 * orientation: "standard" or "flipped". */
HOPF_API hopf_status hopf_hall(hopf_context* ctx, long max_weight, const char* orientation);

/* mode "k" or "eps": input n. mode "Z": NSym word ("z1z2"). mode "Zstar":
 * forest. */
HOPF_API hopf_status hopf_zhao(hopf_context* ctx, const char* mode, const char* input);

/* format: "json" or "text". */
HOPF_API hopf_status hopf_frame(hopf_context* ctx, long max_weight, const char* format);

/* suite: "hopf-axioms", "duality", "pi-kernel", "diagrams", "prop53", "all".
 * Returns HOPF_CHECK_FAILED (with the report as output) when a check fails. */
HOPF_API hopf_status hopf_check(hopf_context* ctx, const char* suite, long max_weight);

/* Truncated universal singular frame as an inspectable handle. */
typedef struct hopf_frame_series hopf_frame_series;

HOPF_API hopf_status hopf_frame_series_new(hopf_context* ctx, long max_weight, hopf_frame_series** out);
HOPF_API void hopf_frame_series_free(hopf_frame_series* s);
HOPF_API size_t hopf_frame_series_size(const hopf_frame_series* s);
/* letters and coeff stay valid while s lives. */
HOPF_API hopf_status hopf_frame_series_term(const hopf_frame_series* s, size_t index, const int** letters,
                                            size_t* length, const char** coeff, long* v_pow, long* z_pow);

#ifdef __cplusplus
}
#endif

#endif
