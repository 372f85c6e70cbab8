/* Kobayashi and Wu metrics on the egg domains E = { |z1|^{2m} + |zhat|^2 < 1 } in C^n. */
#ifndef EGGMETRICS_EGGMETRICS_H
#define EGGMETRICS_EGGMETRICS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(EGG_BUILDING_LIBRARY)
#define EGG_API __attribute__((visibility("default")))
#else
#define EGG_API
#endif

typedef enum egg_status {
    EGG_OK = 0,
    EGG_ERR_INVALID_ARGUMENT = 1,
    EGG_ERR_DOMAIN = 2,          /* point outside the domain */
    EGG_ERR_NUMERICAL = 3,       /* root finding or differencing failed */
    EGG_ERR_CONFIGURATION = 4,   /* request does not apply to this m */
    EGG_ERR_SEAM_PROXIMITY = 5,  /* differencing stencil would cross a seam */
    EGG_ERR_UNSUPPORTED = 6,
    EGG_ERR_INTERNAL = 7
} egg_status;

typedef enum egg_region {
    EGG_REGION_Z = 0,
    EGG_REGION_M_MINUS = 1,
    EGG_REGION_M_ZERO = 2,
    EGG_REGION_M_PLUS = 3,
    EGG_REGION_GENERIC = 4,
    EGG_REGION_OUTSIDE = 5
} egg_region;

typedef enum egg_branch { EGG_BRANCH_LOWER = 0, EGG_BRANCH_UPPER = 1, EGG_BRANCH_AXIS = 2 } egg_branch;
typedef enum egg_curve_branch { EGG_CURVE_LOWER = 0, EGG_CURVE_UPPER = 1 } egg_curve_branch;
typedef enum egg_fit_case {
    EGG_FIT_CHORD = 0,
    EGG_FIT_LOWER_LINE = 1,
    EGG_FIT_UPPER_CONTACT = 2,
    EGG_FIT_ORIGIN_LIMIT = 3
} egg_fit_case;
typedef enum egg_tensor_formula {
    EGG_FORMULA_CHORD = 0,
    EGG_FORMULA_KAHLER_POTENTIAL = 1,
    EGG_FORMULA_CONTACT_EQUATION = 2,
    EGG_FORMULA_ORIGIN_LIMIT = 3
} egg_tensor_formula;
typedef enum egg_convexity { EGG_CONVEX = 0, EGG_CONCAVE = 1, EGG_AFFINE = 2, EGG_MIXED = 3 } egg_convexity;
typedef enum egg_seam { EGG_SEAM_Z = 0, EGG_SEAM_M_ZERO = 1, EGG_SEAM_JUNCTION = 2 } egg_seam;
typedef enum egg_verdict {
    EGG_VERDICT_HOLDER = 0,
    EGG_VERDICT_KINK = 1,
    EGG_VERDICT_SMOOTH = 2,
    EGG_VERDICT_INCONCLUSIVE = 3
} egg_verdict;

typedef struct egg_complex {
    double re;
    double im;
} egg_complex;

typedef struct egg_domain egg_domain;

/* ---- library ---- */
EGG_API const char* egg_version(void);
/* message of the last failed call on this thread ("" if none) */
EGG_API const char* egg_last_error(void);
EGG_API const char* egg_status_name(egg_status s);
EGG_API const char* egg_region_name(egg_region r);
EGG_API const char* egg_branch_name(egg_branch b);
EGG_API const char* egg_curve_branch_name(egg_curve_branch b);
EGG_API const char* egg_fit_case_name(egg_fit_case c);
EGG_API const char* egg_tensor_formula_name(egg_tensor_formula f);
EGG_API const char* egg_convexity_name(egg_convexity c);
EGG_API const char* egg_seam_name(egg_seam s);
EGG_API const char* egg_verdict_name(egg_verdict v);
EGG_API egg_status egg_parse_seam(const char* text, egg_seam* out);

/* ---- domain (m >= 1/2, 2 <= n <= 64) ---- */
EGG_API egg_status egg_domain_create(double m, int n, egg_domain** out);
EGG_API void egg_domain_destroy(egg_domain* d);
EGG_API double egg_domain_m(const egg_domain* d);
EGG_API int egg_domain_n(const egg_domain* d);

/* Points and vectors are arrays of n complex numbers. */
EGG_API egg_status egg_contains(const egg_domain* d, const egg_complex* z, int* inside);
EGG_API egg_status egg_classify(const egg_domain* d, const egg_complex* z, egg_region* out);
EGG_API egg_status egg_seam_distance(const egg_domain* d, const egg_complex* z, double* out);
EGG_API egg_status egg_minkowski_gauge(const egg_domain* d, const egg_complex* v, double* out);
/* image of z under the automorphism taking p to (reference coordinate, 0) */
EGG_API egg_status egg_automorphism(const egg_domain* d, const egg_complex* p, const egg_complex* z,
                                    egg_complex* out);
/* n x n row-major, out[i*n + j] = d(Phi_p)_i / dz_j at z */
EGG_API egg_status egg_automorphism_jacobian(const egg_domain* d, const egg_complex* p, const egg_complex* z,
                                             egg_complex* out);

/* ---- Kobayashi metric ---- */
EGG_API egg_status egg_kobayashi(const egg_domain* d, const egg_complex* z, const egg_complex* v, double* out);
/* at the reference point (p1, 0); branch may be NULL */
EGG_API egg_status egg_kobayashi_reference(const egg_domain* d, double p1, const egg_complex* v, double* out,
                                           egg_branch* branch);

/* ---- Wu metric ---- */
typedef struct egg_tensor_info {
    egg_region region;
    egg_tensor_formula formula;
    int limit; /* evaluated by the origin-limit transport on Z */
    double min_eig;
    double max_eig;
    double hermitian_defect;
} egg_tensor_info;

/* h is n x n row-major with h[i*n + j] = h_{i jbar}; |v|^2 = sum h[i*n+j] v_i conj(v_j). info may be NULL. */
EGG_API egg_status egg_wu_tensor(const egg_domain* d, const egg_complex* z, egg_complex* h, egg_tensor_info* info);
/* independent route through the automorphism and the reference fit */
EGG_API egg_status egg_pullback_tensor(const egg_domain* d, const egg_complex* z, egg_complex* h);
EGG_API egg_status egg_wu_norm(const egg_domain* d, const egg_complex* z, const egg_complex* v, double* out);
/* step <= 0 selects the default */
EGG_API egg_status egg_kahler_defect(const egg_domain* d, const egg_complex* z, double step, double* out);

/* ---- ellipsoid fits at (p1, 0) ---- */
typedef struct egg_fit {
    double r1;
    double r2;
    egg_fit_case fit_case;
} egg_fit;

EGG_API egg_status egg_fit_reference(const egg_domain* d, double p1, egg_fit* out);
EGG_API egg_status egg_fit_origin(const egg_domain* d, egg_fit* out);
/* samples <= 0 selects the default (4096) */
EGG_API egg_status egg_fit_oracle(const egg_domain* d, double p1, int samples, egg_fit* out);
EGG_API egg_status egg_containment_violation(const egg_domain* d, double p1, double r1, double r2, int samples,
                                             double* out);
/* M- contact point on the upper K-curve */
EGG_API egg_status egg_contact_point(const egg_domain* d, double p1, double* x, double* y, double* alpha);
EGG_API egg_status egg_solve_x(const egg_domain* d, double p1, double* out);

/* ---- indicatrix geometry ---- */
typedef struct egg_kcurve_sample {
    egg_curve_branch branch;
    double alpha;
    double x; /* |vhat|^2 */
    double y; /* |v1|^2 */
} egg_kcurve_sample;

EGG_API egg_status egg_kcurve_range(const egg_domain* d, double p1, egg_curve_branch b, double* lo, double* hi);
EGG_API egg_status egg_kcurve_sample_at(const egg_domain* d, double p1, egg_curve_branch b, double alpha,
                                        egg_kcurve_sample* out);
/* count >= 2 samples written to out */
EGG_API egg_status egg_kcurve_grid(const egg_domain* d, double p1, egg_curve_branch b, int count,
                                   egg_kcurve_sample* out);

typedef struct egg_joining {
    double x_join;
    double y_join;
    double xdot;
    double d2_numerator;
    double d2_match;
    double d3_numerator;
    double d3_jump;
    double closed_form_numerator;
} egg_joining;

EGG_API egg_status egg_joining_derivatives(const egg_domain* d, double p1, egg_joining* out);

typedef struct egg_convexity_result {
    egg_convexity verdict;
    double margin;
    double max_abs_second_difference;
    int samples;
} egg_convexity_result;

EGG_API egg_status egg_square_convexity(const egg_domain* d, double p1, egg_curve_branch b, int samples,
                                        egg_convexity_result* out);

/* ---- curvature ---- */
/* step <= 0 selects the default (1e-4) */
EGG_API egg_status egg_holomorphic_curvature(const egg_domain* d, const egg_complex* z, const egg_complex* v,
                                             double step, double* out);
/* R has n^4 entries, R[((i*n + j)*n + k)*n + l] = R_{i jbar k lbar}; kahler_defect may be NULL */
EGG_API egg_status egg_curvature_tensor(const egg_domain* d, const egg_complex* z, double step, egg_complex* R,
                                        double* kahler_defect);

typedef struct egg_grid_spec {
    double z1_min;
    double z1_max;
    int z1_count;
    double zhat_min; /* fractions of the admissible |zhat| at the given |z1| */
    double zhat_max;
    int zhat_count;
    double step;
} egg_grid_spec;

EGG_API void egg_grid_spec_default(egg_grid_spec* g);

typedef struct egg_curvature_record {
    egg_region region;
    int skipped;
    char skip_reason[160];
    double step;
    double min_sec;
    double max_sec;
    double kahler_defect;
    double symmetry_defect;
    double conjugate_defect;
    double r11_22_minus_r21_12;
} egg_curvature_record;

typedef struct egg_curvature_scan egg_curvature_scan;

/* threads <= 0: EGG_METRICS_THREADS, else hardware threads */
EGG_API egg_status egg_curvature_scan_run(const egg_domain* d, const egg_grid_spec* g, uint64_t seed, int threads,
                                          egg_curvature_scan** out);
EGG_API size_t egg_curvature_scan_size(const egg_curvature_scan* s);
/* point may be NULL, else receives n complex numbers */
EGG_API egg_status egg_curvature_scan_record(const egg_curvature_scan* s, size_t i, egg_curvature_record* out,
                                             egg_complex* point);
EGG_API void egg_curvature_scan_destroy(egg_curvature_scan* s);

/* ---- smoothness ---- */
typedef struct egg_probe_options {
    double step_max;
    double step_min;
    int scales;
    double jump_step;
    double control_offset;
    double jump_factor;
    double min_r_squared;
    int max_order;
    int paths;
    double junction_p1;
} egg_probe_options;

EGG_API void egg_probe_options_default(egg_probe_options* o);

typedef struct egg_smoothness_report {
    char path[192];
    char component[32];
    int order;
    double exponent;
    double r_squared;
    int scales_used;
    int below_noise;
    double step_min;
    double step_max;
    double jump;
    double jump_error;
    double noise;
    int jump_detected;
    egg_verdict verdict;
} egg_smoothness_report;

typedef double (*egg_scalar_fn)(double t, void* user);

/* probe of a user path; control may be NULL */
EGG_API egg_status egg_holder_exponent(egg_scalar_fn f, void* user, int order, egg_scalar_fn control,
                                       void* control_user, const egg_probe_options* opt, egg_smoothness_report* out);

typedef struct egg_smoothness_scan egg_smoothness_scan;

/* component: "wu:i,j[:im]", "kobayashi", "indicatrix" or NULL for the seam default; opt may be NULL */
EGG_API egg_status egg_smoothness_scan_run(const egg_domain* d, egg_seam seam, const char* component, uint64_t seed,
                                           const egg_probe_options* opt, int threads, egg_smoothness_scan** out);
EGG_API size_t egg_smoothness_scan_size(const egg_smoothness_scan* s);
EGG_API size_t egg_smoothness_scan_paths(const egg_smoothness_scan* s);
EGG_API egg_status egg_smoothness_scan_record(const egg_smoothness_scan* s, size_t i, egg_smoothness_report* out);

typedef struct egg_regularity {
    int continuous_order; /* -1: nothing found through the probed orders */
    double exponent;
    int inconclusive;
    char label[96];
} egg_regularity;

EGG_API egg_status egg_smoothness_scan_classify(const egg_smoothness_scan* s, size_t path, egg_regularity* out);
EGG_API void egg_smoothness_scan_destroy(egg_smoothness_scan* s);

/* ---- verification suite ---- */
typedef struct egg_check {
    char name[128];
    int passed;
    double measured;
    double threshold;
    char detail[512];
} egg_check;

typedef struct egg_verify egg_verify;

EGG_API egg_status egg_verify_run(const egg_domain* d, uint64_t seed, int threads, egg_verify** out);
EGG_API size_t egg_verify_size(const egg_verify* v);
EGG_API egg_status egg_verify_record(const egg_verify* v, size_t i, egg_check* out);
EGG_API void egg_verify_destroy(egg_verify* v);

#ifdef __cplusplus
}
#endif

#endif
