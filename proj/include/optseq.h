/* optseq C API: periodic binary sequences, exact correlation spectra,
 * construction families, classification, closed-form verification and
 * exhaustive search behind opaque handles.
 *
 * All functions returning optseq_status report failure details through
 * optseq_last_error(). Strings returned through char** outputs are heap
 * allocated and must be released with optseq_string_free(). Handles are
 * released with the matching *_free call. Handles are immutable and may be
 * used concurrently from multiple threads.
 */
#ifndef OPTSEQ_H
#define OPTSEQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct optseq_sequence optseq_sequence;
typedef struct optseq_spectrum optseq_spectrum;

typedef enum optseq_status {
    OPTSEQ_OK = 0,
    OPTSEQ_ERROR_INVALID_ARGUMENT = 1,
    OPTSEQ_ERROR_PARSE = 2,
    OPTSEQ_ERROR_PERIOD_MISMATCH = 3,
    OPTSEQ_ERROR_UNSUPPORTED = 4,
    OPTSEQ_ERROR_INTERNAL = 5
} optseq_status;

const char* optseq_version(void);

/* Thread-local message for the most recent failure in this thread. */
const char* optseq_last_error(void);

void optseq_string_free(char* s);

/* ---- sequences ---------------------------------------------------------- */

/* text: '0'/'1' characters, period = length. */
optseq_status optseq_sequence_parse(const char* text, optseq_sequence** out);
/* spec: literal, "file:PATH", or "family(key=value,...)"; families are
 * legendre, mseq, gmw, twinprime, v, w, diffset, interleave4. */
optseq_status optseq_sequence_from_spec(const char* spec, optseq_sequence** out);
void optseq_sequence_free(optseq_sequence* s);

size_t optseq_sequence_period(const optseq_sequence* s);
long long optseq_sequence_weight(const optseq_sequence* s);
long long optseq_sequence_balance(const optseq_sequence* s);
/* Renders the '0'/'1' text of one period. */
optseq_status optseq_sequence_render(const optseq_sequence* s, char** out);

optseq_status optseq_sequence_shift(const optseq_sequence* s, long long m, optseq_sequence** out);
optseq_status optseq_sequence_complement(const optseq_sequence* s, optseq_sequence** out);
optseq_status optseq_sequence_canonical_form(const optseq_sequence* s, optseq_sequence** out);
/* mask: one '0'/'1' per column; column j is complemented when mask[j]='1'. */
optseq_status optseq_interleave_masked(const optseq_sequence* const* columns, size_t column_count,
                                       const char* mask, optseq_sequence** out);

/* ---- correlation --------------------------------------------------------- */

optseq_status optseq_cross_corr(const optseq_sequence* a, const optseq_sequence* b, long long tau,
                                long long* out);
/* use_fast != 0 selects the transform path; guard_tripped (may be NULL)
 * reports that the rounding guard fired and the exact engine was used. */
optseq_status optseq_auto_spectrum(const optseq_sequence* a, int use_fast, optseq_spectrum** out,
                                   int* guard_tripped);
optseq_status optseq_cross_spectrum(const optseq_sequence* a, const optseq_sequence* b,
                                    optseq_spectrum** out);
void optseq_spectrum_free(optseq_spectrum* s);

size_t optseq_spectrum_period(const optseq_spectrum* s);
optseq_status optseq_spectrum_value(const optseq_spectrum* s, long long tau, long long* out);
/* format: "text", "csv" or "json". */
optseq_status optseq_spectrum_render(const optseq_spectrum* s, const char* format, char** out);

/* ---- classification ------------------------------------------------------ */

optseq_status optseq_classify_json(const optseq_sequence* a, char** out);
optseq_status optseq_ads_json(const optseq_sequence* a, char** out);

/* ---- verification -------------------------------------------------------- */

/* target: lemma3|lemma4|lemma5|lemma6|lemma7|thm1..thm7|wlists.
 * params: comma-separated key=value list (may be NULL or empty).
 * out_verified (may be NULL) receives 1 when every check passed. */
optseq_status optseq_verify_json(const char* target, const char* params, char** out_json,
                                 int* out_verified);

/* ---- search --------------------------------------------------------------- */

/* Called once per hit in deterministic (lexicographic) order. A non-zero
 * return aborts the search. */
typedef int (*optseq_search_hit_fn)(const char* bits, void* user);

/* target: "perfect", "optimal" or "values=v1|v2|...". max_period <= 0 uses
 * the built-in cap (28) unless the OPTSEQ_MAX_N environment variable is set.
 * summary_json (may be NULL) receives the run summary. */
optseq_status optseq_search(size_t period, const char* target, int canonicalize, unsigned jobs,
                            long long max_period, optseq_search_hit_fn on_hit, void* user,
                            char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* OPTSEQ_H */
