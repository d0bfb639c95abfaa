#ifndef HORNCONE_H
#define HORNCONE_H

/* C interface to the horncone library: eigenvalue-majorization feasibility,
 * Horn/Schubert list generation, witness construction, module oracles, and
 * inequality-minimality checks.
 *
 * Conventions:
 *   - Spectra are strings of comma-separated rationals, weakly decreasing,
 *     e.g. "3/2,1,0"; several spectra are joined with ';'.
 *   - Partitions are comma-separated nonnegative integers, e.g. "2,1"
 *     (the empty partition is "0").
 *   - Every operation fills an hc_result out-parameter carrying a JSON
 *     document (hc_result_json) and returns an hc_status.  Results must be
 *     released with hc_result_free.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,         /* success; for decision queries: feasible / exists */
  HC_INFEASIBLE = 1, /* the queried property does not hold */
  HC_USAGE = 2,      /* malformed input or invalid configuration */
  HC_BUDGET = 3,     /* enumeration or search budget exhausted */
  HC_UNRESOLVED = 4, /* numerical search ended without a verdict */
  HC_ERROR = 5       /* internal failure */
} hc_status;

const char* hc_status_name(hc_status status);

/* ----- options (opaque) ------------------------------------------------- */

typedef struct hc_options hc_options;

hc_options* hc_options_new(void);
void hc_options_free(hc_options* options);

hc_status hc_options_set_seed(hc_options* options, uint64_t seed);
hc_status hc_options_set_tolerance(hc_options* options, double tolerance);
hc_status hc_options_set_coefficient_one_only(hc_options* options, int flag);
hc_status hc_options_set_real_symmetric(hc_options* options, int flag);
/* Nonzero: hc_check evaluates the compiled inequality system in floating
 * point with the configured tolerance instead of exact rationals. */
hc_status hc_options_set_float_mode(hc_options* options, int flag);
hc_status hc_options_set_trials(hc_options* options, int trials);
hc_status hc_options_set_restarts(hc_options* options, int restarts);
hc_status hc_options_set_max_iterations(hc_options* options, int iterations);
hc_status hc_options_set_diagonal_budget(hc_options* options, long long budget);

/* ----- results (opaque) ------------------------------------------------- */

typedef struct hc_result hc_result;

void hc_result_free(hc_result* result);
/* JSON document describing the outcome; owned by the result. */
const char* hc_result_json(const hc_result* result);
hc_status hc_result_status(const hc_result* result);
/* Human-readable message for non-OK statuses (empty string otherwise). */
const char* hc_result_message(const hc_result* result);

/* ----- operations -------------------------------------------------------
 * Any operation accepts options == NULL for defaults (seed 0, tolerance
 * 1e-8, coefficient-one lists, complex Hermitian witnesses).
 */

/* Littlewood-Richardson coefficient c_{lambda mu}^{nu}. */
hc_status hc_lr_coefficient(const char* lambda, const char* mu, const char* nu,
                            hc_result** result);

/* Product of Schubert classes in H*(Gr(r, n)); factors ';'-separated. */
hc_status hc_schubert_product(const char* factors, int r, int n, hc_result** result);

/* S_r^n(m) or R_r^n(m); r < 0 enumerates every cardinality.  JSON field
 * "entries" holds one record per tuple. */
hc_status hc_lists(int r, int n, int m, int restrict_to_R, hc_result** result);

/* Horn triples (forward or reverse flavour) for all r = 1..n. */
hc_status hc_triples(int n, int m, int reverse, const hc_options* options, hc_result** result);

/* Majorization / equality / reverse feasibility over the Horn triples.
 * Status HC_OK = feasible, HC_INFEASIBLE otherwise. */
hc_status hc_check(const char* alphas, const char* gamma, const hc_options* options,
                   hc_result** result);
hc_status hc_check_equality(const char* alphas, const char* gamma, const hc_options* options,
                            hc_result** result);
hc_status hc_check_reverse(const char* alphas, const char* gamma, const hc_options* options,
                           hc_result** result);

/* Smallest lifted gamma~ >= gamma making the instance an equality instance. */
hc_status hc_lift(const char* alphas, const char* gamma, hc_result** result);

/* Partitions alpha~(s) inside alpha(s) certifying feasibility through a
 * positive iterated coefficient. */
hc_status hc_shrink(const char* alphas, const char* gamma, hc_result** result);

/* Hermitian witness: with gamma, matrices A(s) and C realizing the majorized
 * instance; with gamma == NULL, matrices with sum(A) <= 0. */
hc_status hc_witness(const char* alphas, const char* gamma, const hc_options* options,
                     hc_result** result);

/* Module oracle: exact sequence of types (beta, gamma, alpha) over Z/p^N,
 * brute force cross-checked against the LR and inequality routes. */
hc_status hc_modules(const char* alpha, const char* beta, const char* gamma, long long p,
                     hc_result** result);

/* LP irredundancy of the full inequality system. HC_OK = all essential. */
hc_status hc_minimal(int n, int m, const hc_options* options, hc_result** result);

/* Monte Carlo necessity trial run.  HC_OK = no violation beyond tolerance. */
hc_status hc_verify_necessity(int n, int m, const hc_options* options, hc_result** result);

/* Exhaustive equivalence suites (characterization routes and module oracles).
 * HC_OK when every case agrees. */
hc_status hc_sweep(int max_weight, int max_n, int module_weight_p2, int module_weight_p3,
                   hc_result** result);

#ifdef __cplusplus
}
#endif

#endif /* HORNCONE_H */
