/* C interface to the determinantal Groebner basis library.
 *
 * Every fallible entry point returns a detgb_status. Output payloads and
 * error messages are heap-allocated NUL-terminated strings owned by the
 * caller; release them with detgb_string_free. Error-message pointers may be
 * NULL when the caller does not need diagnostics.
 */

#ifndef DETGB_H
#define DETGB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum detgb_status {
    DETGB_OK = 0,
    /* A verification ran to completion and the property does not hold. */
    DETGB_CHECK_FAILED = 1,
    /* Malformed input or a violated precondition. */
    DETGB_ERROR_INVALID_INPUT = 2,
    /* A mathematically unsupported request, e.g. a diagonal term order with
     * a non-vexillary permutation. */
    DETGB_ERROR_UNSUPPORTED = 3,
    /* A broken internal invariant. */
    DETGB_ERROR_INTERNAL = 4,
    /* Input exceeds a desk-scale guard (see DETGB_MAX_SCALE). */
    DETGB_ERROR_SCALE = 5
} detgb_status;

typedef struct detgb_permutation detgb_permutation;

const char* detgb_version(void);

/* Accepts "2143" (compact, n <= 9) and "[10,9,2,...]" / "10,9,2,..." forms. */
detgb_status detgb_permutation_parse(const char* text, detgb_permutation** out,
                                     char** error_message);
void detgb_permutation_free(detgb_permutation* w);
int detgb_permutation_size(const detgb_permutation* w);
detgb_status detgb_permutation_is_vexillary(const detgb_permutation* w, int* out_is_vexillary);
detgb_status detgb_permutation_format(const detgb_permutation* w, char** out);

/* what:   "ess" | "rothe" | "fulton" | "elusive" | "redgb" | "wchar"
 * order:  "new" "nes" "swe" "swn" "nwe" "nws" "sew" "sen"; required for
 *         "redgb" and "wchar", ignored otherwise (may be NULL).
 * format: "text" | "json" (NULL means text).
 * with_stats != 0 replaces the payload by counts and wall time. */
detgb_status detgb_schubert(const detgb_permutation* w, const char* what, const char* order,
                            const char* format, int with_stats, char** out_payload,
                            char** error_message);

/* check:  "gb" | "minimal" | "reduced" | "normality" | "strongpair"
 * target: "fulton" | "elusive" | "redgb" for the divisibility checks;
 *         ignored for "normality"/"strongpair", which always use the reduced
 *         basis (may be NULL, defaulting to "fulton").
 * Returns DETGB_OK when the property holds and DETGB_CHECK_FAILED when the
 * check ran but the property fails; the report says which. */
detgb_status detgb_verify(const detgb_permutation* w, const char* check, const char* target,
                          const char* order, const char* format, char** out_report,
                          char** error_message);

/* subcommand: "onesided" | "twosided" | "tovex" | "criteria"
 * spec_json:  the job description (schemas documented in the README).
 * order:      required for "criteria"; NULL otherwise.
 * n:          ambient symmetric group for "tovex"; 0 picks the smallest. */
detgb_status detgb_ladder(const char* subcommand, const char* spec_json, const char* order,
                          const char* format, int n, char** out_payload, char** error_message);

void detgb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* DETGB_H */
