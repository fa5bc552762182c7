/*
 * C interface to the almost-contact-metric tensor decomposition library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns an acm_status; on failure a thread-local
 * message with details is available from acm_last_error(). Strings returned
 * through char** out-parameters are heap-allocated and must be released with
 * acm_string_free().
 */
#ifndef ACM_ACM_H
#define ACM_ACM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct acm_structure acm_structure;
typedef struct acm_tensor acm_tensor;

typedef enum acm_status {
  ACM_OK = 0,
  ACM_ERROR_INVALID_ARGUMENT = 1,
  ACM_ERROR_PARSE = 2,
  ACM_ERROR_DIMENSION = 3,
  ACM_ERROR_DOMAIN = 4,
  ACM_ERROR_NOT_IN_SPACE = 5,
  ACM_ERROR_VALIDATION = 6,
  ACM_ERROR_UNKNOWN_CHART = 7,
  ACM_ERROR_RANK_UNSTABLE = 8,
  ACM_ERROR_INTERNAL = 9
} acm_status;

const char* acm_status_name(acm_status status);

/* Thread-local message describing the last failure in the calling thread. */
const char* acm_last_error(void);

void acm_string_free(char* text);

/* ----- structures --------------------------------------------------- */

/* Standard structure on the orthonormal basis of dimension 2n+1. */
acm_status acm_structure_standard(int n, acm_structure** out);

/*
 * Parses {"n": int, "phi": [[...]], "xi": [...], "eta": [...], "g": [[...]]}
 * (omitted fields default to the standard structure of n), validates the
 * axioms and re-expresses the result in a g-orthonormal basis with xi last.
 */
acm_status acm_structure_from_json(const char* json_text, acm_structure** out);

/*
 * Validation report for a structure JSON as given (no frame change):
 * {"ok": bool, "max_residual": x, "violated_axioms": [...]}.
 * ok_out receives 1/0. Parse failures are errors; axiom violations are not.
 */
acm_status acm_structure_validate_json(const char* json_text, int* ok_out,
                                       char** report_json_out);

int acm_structure_n(const acm_structure* s);
int acm_structure_dim(const acm_structure* s);
void acm_structure_free(acm_structure* s);

/* ----- tensors ------------------------------------------------------- */

acm_status acm_tensor_zero(int n, acm_tensor** out);

/* Parses {"n": int, "values": [2n+1]^3 nested array}. */
acm_status acm_tensor_from_json(const char* json_text, acm_tensor** out);
acm_status acm_tensor_to_json(const acm_tensor* t, char** json_out);

/* Deterministic-in-seed random element of the constraint space. */
acm_status acm_tensor_random(const acm_structure* s, uint64_t seed,
                             acm_tensor** out);

int acm_tensor_n(const acm_tensor* t);
acm_status acm_tensor_get(const acm_tensor* t, int i, int j, int k,
                          double* out);
acm_status acm_tensor_set(acm_tensor* t, int i, int j, int k, double value);
void acm_tensor_free(acm_tensor* t);

/* ----- operations ---------------------------------------------------- */

acm_status acm_membership_residual(const acm_structure* s, const acm_tensor* t,
                                   double* out);
acm_status acm_inner_product(const acm_tensor* a, const acm_tensor* b,
                             double* out);
acm_status acm_project_to_space(const acm_structure* s, const acm_tensor* t,
                                acm_tensor** out);

/* Associated form F_i (i = 1..12) and component projector p_i. */
acm_status acm_associated_form(const acm_structure* s, int i,
                               const acm_tensor* t, acm_tensor** out);
acm_status acm_project_component(const acm_structure* s, int i,
                                 const acm_tensor* t, acm_tensor** out);

/*
 * Component spectrum as JSON:
 * {"n": int, "norms": [12 numbers, null for absent], "residual": x,
 *  "membership": x}.
 * membership_tol <= 0 selects the algebraic default.
 */
acm_status acm_spectrum_json(const acm_structure* s, const acm_tensor* t,
                             double membership_tol, char** json_out);

/*
 * Classification verdict as JSON:
 * {"kind": "...", "classes": [...], "tol": x, "diagnostics": {...}}.
 * tol <= 0 selects the algebraic default; membership_tol <= 0 likewise.
 */
acm_status acm_classify_tensor_json(const acm_structure* s,
                                    const acm_tensor* t, double tol,
                                    double membership_tol, char** json_out);

/* ----- geometry pipeline --------------------------------------------- */

/* JSON array of built-in chart names. */
acm_status acm_chart_list_json(char** json_out);

/*
 * Extracts the covariant-derivative tensor of the chart at the point,
 * decomposes and classifies it. point_len must equal 2n+1 of the chart.
 * step <= 0 and tol <= 0 select the geometry defaults.
 */
acm_status acm_classify_chart_json(const char* chart_name, const double* point,
                                   int point_len, double step, double tol,
                                   char** json_out);
acm_status acm_chart_spectrum_json(const char* chart_name, const double* point,
                                   int point_len, double step,
                                   char** json_out);

/* ----- self test ------------------------------------------------------ */

/*
 * Runs every invariant suite at the given size. pass_out receives 1 iff all
 * suites pass; the JSON report lists each suite with its max residual.
 */
acm_status acm_selftest_json(int n, int trials, uint64_t seed, int* pass_out,
                             char** report_json_out);

#ifdef __cplusplus
}
#endif

#endif /* ACM_ACM_H */
