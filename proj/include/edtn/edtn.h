#ifndef EDTN_H
#define EDTN_H

/* C API of the elastic Dirichlet-to-Neumann symbol library.
 *
 * The library computes the boundary symbol of the elastic DN map on closed
 * planar curves and flat charts, evaluates two independent exact reference
 * solvers (half-space and disk), and runs the JSON-configured experiment
 * suites behind the edtn CLI.
 *
 * Conventions: complex numbers are (re, im) pairs; d x d complex matrices
 * are row-major arrays of 2*d*d doubles (re, im interleaved per entry). The
 * boundary normal points into the domain unless EDTN_ORIENT_OUTWARD is
 * passed. All functions return EDTN_OK on success; on failure they return a
 * status code and leave a message in edtn_last_error() (thread-local).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EDTN_API __declspec(dllexport)
#else
#define EDTN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum edtn_status {
    EDTN_OK = 0,
    EDTN_ERR_INVALID_ARGUMENT = 1,
    EDTN_ERR_DOMAIN = 2,          /* input outside the supported regime */
    EDTN_ERR_SINGULAR = 3,        /* degenerate configuration */
    EDTN_ERR_NO_CONVERGENCE = 4,  /* iteration cap exhausted */
    EDTN_ERR_PARSE = 5,           /* malformed configuration */
    EDTN_ERR_IO = 6,              /* file system failure */
    EDTN_ERR_INTERNAL = 7
} edtn_status;

typedef enum edtn_orientation {
    EDTN_ORIENT_INWARD = 0,
    EDTN_ORIENT_OUTWARD = 1
} edtn_orientation;

typedef struct edtn_complex {
    double re;
    double im;
} edtn_complex;

typedef struct edtn_params {
    double h;
    double theta;
    edtn_complex z;
    edtn_complex tau;
} edtn_params;

/* Library version string ("major.minor.patch"). */
EDTN_API const char* edtn_version(void);

/* Thread-local message describing the last failure in this thread. */
EDTN_API const char* edtn_last_error(void);

/* Semiclassical bookkeeping: h = 1/Re tau, z = h tau = 1 + i theta.
 * Requires Re tau >= Im tau > 0. */
EDTN_API edtn_status edtn_params_from_tau(double tau_re, double tau_im, edtn_params* out);

/* Constant-medium handle. mu > 0, lambda + mu > 0, density > 0. */
typedef struct edtn_medium edtn_medium;
EDTN_API edtn_status edtn_medium_create_constant(double mu, double lambda, double density,
                                                 edtn_medium** out);

/* Medium with cosine boundary profiles field(s) = base*(1 + amp cos(freq s + phase));
 * pass amp = 0 for a constant field. freq must be periodic on the target curve. */
typedef struct edtn_field_profile {
    double base;
    double cos_amp;
    double cos_freq;
    double cos_phase;
} edtn_field_profile;
EDTN_API edtn_status edtn_medium_create_profile(const edtn_field_profile* mu,
                                                const edtn_field_profile* lambda,
                                                const edtn_field_profile* density,
                                                edtn_medium** out);
EDTN_API void edtn_medium_destroy(edtn_medium* medium);

/* Glancing-set classification at r0: sign of c_{s,p} r0 - n with residuals.
 * region: 0 hyperbolic-for-both, 1 between, 2 elliptic-for-both. */
EDTN_API edtn_status edtn_region_classify(const edtn_medium* medium, double s, double r0,
                                          int* region, double* residual_s, double* residual_p);

/* Normal root sqrt(-r0 + z^2 n/c), principal branch (Im > 0). branch: 0 = s, 1 = p. */
EDTN_API edtn_status edtn_rho(const edtn_params* params, const edtn_medium* medium, double s,
                              double r0, int branch, edtn_complex* out);

/* DN principal symbol and first-order correction at a point of a circle of
 * the given radius: xi is the cotangent coordinate dual to arclength.
 * Outputs (any may be NULL): md_ambient, md_frame (components along
 * (normal, tangent)), q (2x2 matrices, 8 doubles each), rho_s, rho_p. */
EDTN_API edtn_status edtn_symbol_circle(const edtn_params* params, const edtn_medium* medium,
                                        double radius, double s, double xi, int orientation,
                                        double* md_ambient, double* md_frame, double* q,
                                        edtn_complex* rho_s, edtn_complex* rho_p);

/* DN principal symbol on the flat chart in dimension d (2 or 3) at cotangent
 * vector xi_prime (d-1 entries); out is a d x d matrix (2*d*d doubles). */
EDTN_API edtn_status edtn_symbol_flat(const edtn_params* params, const edtn_medium* medium, int d,
                                      const double* xi_prime, int orientation, double* out);

/* Exact half-space DN matrix per plane-wave mode (independent reference
 * solver); out is a d x d matrix (2*d*d doubles). */
EDTN_API edtn_status edtn_halfspace_dn(const edtn_params* params, const edtn_medium* medium,
                                       int d, const double* xi_prime, int orientation,
                                       double* out);

/* Exact disk DN matrix for angular mode n in the (normal, tangent) frame;
 * out is a 2x2 matrix (8 doubles); condition receives the conditioning of
 * the per-mode solve (may be NULL). */
EDTN_API edtn_status edtn_disk_dn_mode(const edtn_params* params, const edtn_medium* medium,
                                       double radius, long n, int orientation, double* out,
                                       double* condition);

/* J_n'(w)/J_n(w) by continued fraction, n >= 0, w != 0. */
EDTN_API edtn_status edtn_bessel_log_derivative(long n, double w_re, double w_im,
                                                edtn_complex* out);

/* Run one experiment from a JSON configuration string. out_dir may be NULL
 * (no files written); orientation_override: -1 keeps the config value.
 * On success *summary_json receives a malloc'd JSON report (caller frees
 * with edtn_string_free); *suite_pass receives 1 if every check passed.
 * A completed run with failing checks still returns EDTN_OK. */
EDTN_API edtn_status edtn_run_experiment(const char* config_json, const char* out_dir,
                                         uint64_t seed, int threads, int orientation_override,
                                         char** summary_json, int* suite_pass);

/* Built-in default configuration for an experiment name, as malloc'd JSON. */
EDTN_API edtn_status edtn_default_config(const char* experiment, char** config_json);

EDTN_API void edtn_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* EDTN_H */
