#include "eggmetrics/eggmetrics.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "core/curvature.hpp"
#include "core/indicatrix.hpp"
#include "core/kobayashi.hpp"
#include "core/smoothness.hpp"
#include "core/verify.hpp"
#include "core/wu_fitting.hpp"
#include "core/wu_tensor.hpp"

struct egg_domain {
    egg::DomainParams params;
};

struct egg_curvature_scan {
    int n;
    std::vector<egg::CurvatureRecord> records;
};

struct egg_smoothness_scan {
    int orders;
    std::vector<egg::SmoothnessReport> reports;
};

struct egg_verify {
    std::vector<egg::CheckResult> checks;
};

namespace {

thread_local std::string last_error;

egg_status status_of(egg::ErrorKind k) {
    switch (k) {
        case egg::ErrorKind::InvalidArgument: return EGG_ERR_INVALID_ARGUMENT;
        case egg::ErrorKind::Domain: return EGG_ERR_DOMAIN;
        case egg::ErrorKind::Numerical: return EGG_ERR_NUMERICAL;
        case egg::ErrorKind::Configuration: return EGG_ERR_CONFIGURATION;
        case egg::ErrorKind::SeamProximity: return EGG_ERR_SEAM_PROXIMITY;
        case egg::ErrorKind::Unsupported: return EGG_ERR_UNSUPPORTED;
    }
    return EGG_ERR_INTERNAL;
}

template <class F>
egg_status guard(F&& f) {
    try {
        f();
        last_error.clear();
        return EGG_OK;
    } catch (const egg::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown failure";
    }
    return EGG_ERR_INTERNAL;
}

void need(const void* p, const char* what) {
    if (!p) egg::fail(egg::ErrorKind::InvalidArgument, std::string(what) + " must not be null");
}

egg::CVector to_vector(const egg_domain* d, const egg_complex* a, const char* what) {
    need(a, what);
    const int n = d->params.n();
    egg::CVector v(n);
    for (int i = 0; i < n; ++i) v(i) = egg::cplx(a[i].re, a[i].im);
    return v;
}

egg::PointCoords to_point(const egg_domain* d, const egg_complex* a) { return egg::PointCoords(to_vector(d, a, "point")); }
egg::TangentVector to_tangent(const egg_domain* d, const egg_complex* a) {
    return egg::TangentVector(to_vector(d, a, "vector"));
}

void put(const egg::cplx& c, egg_complex* out) {
    out->re = c.real();
    out->im = c.imag();
}

void put_matrix(const egg::CMatrix& m, egg_complex* out) {
    const long n = m.rows();
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < m.cols(); ++j) put(m(i, j), &out[i * m.cols() + j]);
}

void copy_text(char* dst, std::size_t cap, const std::string& s) {
    const std::size_t k = std::min(cap - 1, s.size());
    std::memcpy(dst, s.data(), k);
    dst[k] = '\0';
}

void check_domain(const egg_domain* d) { need(d, "domain"); }

egg::ProbeOptions probe_from(const egg_probe_options& o) {
    egg::ProbeOptions p;
    p.step_max = o.step_max;
    p.step_min = o.step_min;
    p.scales = o.scales;
    p.jump_step = o.jump_step;
    p.control_offset = o.control_offset;
    p.jump_factor = o.jump_factor;
    p.min_r_squared = o.min_r_squared;
    return p;
}

void fill_report(const egg::SmoothnessReport& r, egg_smoothness_report* out) {
    copy_text(out->path, sizeof out->path, r.path);
    copy_text(out->component, sizeof out->component, r.component);
    out->order = r.order;
    out->exponent = r.exponent;
    out->r_squared = r.r_squared;
    out->scales_used = r.scales_used;
    out->below_noise = r.below_noise ? 1 : 0;
    out->step_min = r.step_min;
    out->step_max = r.step_max;
    out->jump = r.jump;
    out->jump_error = r.jump_error;
    out->noise = r.noise;
    out->jump_detected = r.jump_detected ? 1 : 0;
    out->verdict = static_cast<egg_verdict>(r.verdict);
}

egg_fit to_fit(const egg::WuEllipsoidDiag& f, egg::FitCase c) { return egg_fit{f.r1, f.r2, static_cast<egg_fit_case>(c)}; }

}  // namespace

extern "C" {

const char* egg_version(void) { return EGG_METRICS_VERSION; }
const char* egg_last_error(void) { return last_error.c_str(); }

const char* egg_status_name(egg_status s) {
    switch (s) {
        case EGG_OK: return "OK";
        case EGG_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
        case EGG_ERR_DOMAIN: return "DOMAIN";
        case EGG_ERR_NUMERICAL: return "NUMERICAL";
        case EGG_ERR_CONFIGURATION: return "CONFIGURATION";
        case EGG_ERR_SEAM_PROXIMITY: return "SEAM_PROXIMITY";
        case EGG_ERR_UNSUPPORTED: return "UNSUPPORTED";
        case EGG_ERR_INTERNAL: return "INTERNAL";
    }
    return "UNKNOWN";
}

const char* egg_region_name(egg_region r) { return egg::region_name(static_cast<egg::RegionLabel>(r)); }
const char* egg_branch_name(egg_branch b) { return egg::branch_name(static_cast<egg::Branch>(b)); }
const char* egg_curve_branch_name(egg_curve_branch b) { return egg::curve_branch_name(static_cast<egg::CurveBranch>(b)); }
const char* egg_fit_case_name(egg_fit_case c) { return egg::fit_case_name(static_cast<egg::FitCase>(c)); }
const char* egg_tensor_formula_name(egg_tensor_formula f) {
    return egg::tensor_formula_name(static_cast<egg::TensorFormula>(f));
}
const char* egg_convexity_name(egg_convexity c) { return egg::convexity_name(static_cast<egg::Convexity>(c)); }
const char* egg_seam_name(egg_seam s) { return egg::seam_name(static_cast<egg::Seam>(s)); }
const char* egg_verdict_name(egg_verdict v) { return egg::verdict_name(static_cast<egg::SmoothnessVerdict>(v)); }

egg_status egg_parse_seam(const char* text, egg_seam* out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = static_cast<egg_seam>(egg::parse_seam(text));
    });
}

egg_status egg_domain_create(double m, int n, egg_domain** out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        *out = new egg_domain{egg::DomainParams::create(m, n)};
    });
}

void egg_domain_destroy(egg_domain* d) { delete d; }
double egg_domain_m(const egg_domain* d) { return d ? d->params.m() : 0.0; }
int egg_domain_n(const egg_domain* d) { return d ? d->params.n() : 0; }

egg_status egg_contains(const egg_domain* d, const egg_complex* z, int* inside) {
    return guard([&] {
        check_domain(d);
        need(inside, "out");
        *inside = egg::contains(d->params, to_point(d, z)) ? 1 : 0;
    });
}

egg_status egg_classify(const egg_domain* d, const egg_complex* z, egg_region* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = static_cast<egg_region>(egg::classify_region(d->params, to_point(d, z)));
    });
}

egg_status egg_seam_distance(const egg_domain* d, const egg_complex* z, double* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        const egg::PointCoords p = to_point(d, z);
        egg::require_inside(d->params, p);
        *out = egg::seam_distance(d->params, p);
    });
}

egg_status egg_minkowski_gauge(const egg_domain* d, const egg_complex* v, double* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = egg::minkowski_gauge(d->params, to_tangent(d, v));
    });
}

egg_status egg_automorphism(const egg_domain* d, const egg_complex* p, const egg_complex* z, egg_complex* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        const egg::PointCoords w = egg::egg_automorphism(d->params, to_point(d, p), to_point(d, z));
        for (int i = 0; i < d->params.n(); ++i) put(w.z(i), &out[i]);
    });
}

egg_status egg_automorphism_jacobian(const egg_domain* d, const egg_complex* p, const egg_complex* z,
                                     egg_complex* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        put_matrix(egg::automorphism_jacobian(d->params, to_point(d, p), to_point(d, z)), out);
    });
}

egg_status egg_kobayashi(const egg_domain* d, const egg_complex* z, const egg_complex* v, double* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = egg::kobayashi(d->params, to_point(d, z), to_tangent(d, v)).norm;
    });
}

egg_status egg_kobayashi_reference(const egg_domain* d, double p1, const egg_complex* v, double* out,
                                   egg_branch* branch) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        const egg::TangentVector t = to_tangent(d, v);
        *out = egg::kobayashi_reference(d->params, p1, t).norm;
        if (branch) *branch = static_cast<egg_branch>(egg::branch_params(d->params, p1, t).branch);
    });
}

egg_status egg_wu_tensor(const egg_domain* d, const egg_complex* z, egg_complex* h, egg_tensor_info* info) {
    return guard([&] {
        check_domain(d);
        need(h, "tensor output");
        const egg::WuTensorResult r = egg::wu_tensor(d->params, to_point(d, z));
        put_matrix(r.form.h, h);
        if (info) {
            info->region = static_cast<egg_region>(r.region);
            info->formula = static_cast<egg_tensor_formula>(r.formula);
            info->limit = r.limit ? 1 : 0;
            info->min_eig = r.form.min_eig();
            info->max_eig = r.form.max_eig();
            info->hermitian_defect = r.form.hermitian_defect();
        }
    });
}

egg_status egg_pullback_tensor(const egg_domain* d, const egg_complex* z, egg_complex* h) {
    return guard([&] {
        check_domain(d);
        need(h, "tensor output");
        put_matrix(egg::pullback_tensor(d->params, to_point(d, z)).h, h);
    });
}

egg_status egg_wu_norm(const egg_domain* d, const egg_complex* z, const egg_complex* v, double* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = egg::wu_norm(d->params, to_point(d, z), to_vector(d, v, "vector"));
    });
}

egg_status egg_kahler_defect(const egg_domain* d, const egg_complex* z, double step, double* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = step > 0.0 ? egg::kahler_defect(d->params, to_point(d, z), step)
                          : egg::kahler_defect(d->params, to_point(d, z));
    });
}

egg_status egg_fit_reference(const egg_domain* d, double p1, egg_fit* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = to_fit(egg::fit_reference(d->params, p1), egg::fit_case(d->params, p1));
    });
}

egg_status egg_fit_origin(const egg_domain* d, egg_fit* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = to_fit(egg::fit_at_origin(d->params),
                      d->params.m() > 1.0 ? egg::FitCase::OriginLimit : egg::FitCase::Chord);
    });
}

egg_status egg_fit_oracle(const egg_domain* d, double p1, int samples, egg_fit* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = to_fit(egg::fit_oracle(d->params, p1, samples > 0 ? samples : 4096), egg::fit_case(d->params, p1));
    });
}

egg_status egg_containment_violation(const egg_domain* d, double p1, double r1, double r2, int samples,
                                     double* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = egg::containment_violation(d->params, p1, egg::WuEllipsoidDiag{r1, r2}, samples > 0 ? samples : 4096);
    });
}

egg_status egg_contact_point(const egg_domain* d, double p1, double* x, double* y, double* alpha) {
    return guard([&] {
        check_domain(d);
        const egg::ContactPoint c = egg::contact_point(d->params, p1);
        if (x) *x = c.x;
        if (y) *y = c.y;
        if (alpha) *alpha = c.alpha;
    });
}

egg_status egg_solve_x(const egg_domain* d, double p1, double* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = egg::solve_X(d->params, p1);
    });
}

egg_status egg_kcurve_range(const egg_domain* d, double p1, egg_curve_branch b, double* lo, double* hi) {
    return guard([&] {
        check_domain(d);
        const egg::ParamRange r = egg::kcurve_range(d->params, p1, static_cast<egg::CurveBranch>(b));
        if (lo) *lo = r.lo;
        if (hi) *hi = r.hi;
    });
}

egg_status egg_kcurve_sample_at(const egg_domain* d, double p1, egg_curve_branch b, double alpha,
                                egg_kcurve_sample* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        const egg::KCurveSample s = egg::kcurve_sample(d->params, p1, static_cast<egg::CurveBranch>(b), alpha);
        *out = egg_kcurve_sample{static_cast<egg_curve_branch>(s.branch), s.alpha, s.x, s.y};
    });
}

egg_status egg_kcurve_grid(const egg_domain* d, double p1, egg_curve_branch b, int count, egg_kcurve_sample* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        const auto g = egg::kcurve_grid(d->params, p1, static_cast<egg::CurveBranch>(b), count);
        for (std::size_t i = 0; i < g.size(); ++i)
            out[i] = egg_kcurve_sample{static_cast<egg_curve_branch>(g[i].branch), g[i].alpha, g[i].x, g[i].y};
    });
}

egg_status egg_joining_derivatives(const egg_domain* d, double p1, egg_joining* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        const egg::JoiningDerivatives j = egg::joining_point_derivatives(d->params, p1);
        *out = egg_joining{j.x_join,       j.y_join,       j.xdot,    j.d2_numerator,
                           j.d2_match,     j.d3_numerator, j.d3_jump, j.closed_form_numerator};
    });
}

egg_status egg_square_convexity(const egg_domain* d, double p1, egg_curve_branch b, int samples,
                                egg_convexity_result* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        const egg::ConvexityVerdict c =
            egg::square_convexity_check(d->params, p1, static_cast<egg::CurveBranch>(b), samples);
        *out = egg_convexity_result{static_cast<egg_convexity>(c.verdict), c.margin, c.max_abs_second_difference,
                                    c.samples};
    });
}

egg_status egg_holomorphic_curvature(const egg_domain* d, const egg_complex* z, const egg_complex* v, double step,
                                     double* out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = egg::holomorphic_curvature(d->params, to_point(d, z), to_vector(d, v, "vector"),
                                          step > 0.0 ? step : 1e-4);
    });
}

egg_status egg_curvature_tensor(const egg_domain* d, const egg_complex* z, double step, egg_complex* R,
                                double* kahler_defect) {
    return guard([&] {
        check_domain(d);
        need(R, "tensor output");
        const egg::CurvatureTensor t = egg::curvature_tensor(d->params, to_point(d, z), step > 0.0 ? step : 1e-4);
        for (std::size_t i = 0; i < t.R.size(); ++i) put(t.R[i], &R[i]);
        if (kahler_defect) *kahler_defect = t.metric_kahler_defect;
    });
}

void egg_grid_spec_default(egg_grid_spec* g) {
    if (!g) return;
    const egg::GridSpec s;
    *g = egg_grid_spec{s.z1_min, s.z1_max, s.z1_count, s.zhat_min, s.zhat_max, s.zhat_count, s.step};
}

egg_status egg_curvature_scan_run(const egg_domain* d, const egg_grid_spec* g, uint64_t seed, int threads,
                                  egg_curvature_scan** out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = nullptr;
        egg::GridSpec s;
        if (g) s = egg::GridSpec{g->z1_min, g->z1_max, g->z1_count, g->zhat_min, g->zhat_max, g->zhat_count, g->step};
        *out = new egg_curvature_scan{d->params.n(), egg::curvature_scan(d->params, s, seed, threads)};
    });
}

size_t egg_curvature_scan_size(const egg_curvature_scan* s) { return s ? s->records.size() : 0; }

egg_status egg_curvature_scan_record(const egg_curvature_scan* s, size_t i, egg_curvature_record* out,
                                     egg_complex* point) {
    return guard([&] {
        need(s, "scan");
        need(out, "out");
        if (i >= s->records.size()) egg::fail(egg::ErrorKind::InvalidArgument, "record index out of range");
        const egg::CurvatureRecord& r = s->records[i];
        out->region = static_cast<egg_region>(r.region);
        out->skipped = r.skipped ? 1 : 0;
        copy_text(out->skip_reason, sizeof out->skip_reason, r.skip_reason);
        out->step = r.step;
        out->min_sec = r.min_sec;
        out->max_sec = r.max_sec;
        out->kahler_defect = r.kahler_defect;
        out->symmetry_defect = r.symmetry_defect;
        out->conjugate_defect = r.conjugate_defect;
        out->r11_22_minus_r21_12 = r.r11_22_minus_r21_12;
        if (point)
            for (int k = 0; k < s->n; ++k) put(r.point.z(k), &point[k]);
    });
}

void egg_curvature_scan_destroy(egg_curvature_scan* s) { delete s; }

void egg_probe_options_default(egg_probe_options* o) {
    if (!o) return;
    const egg::RegularityOptions r;
    const egg::ProbeOptions& p = r.probe;
    *o = egg_probe_options{p.step_max,      p.step_min,    p.scales, p.jump_step, p.control_offset, p.jump_factor,
                           p.min_r_squared, r.max_order,   r.paths,  r.junction_p1};
}

egg_status egg_holder_exponent(egg_scalar_fn f, void* user, int order, egg_scalar_fn control, void* control_user,
                               const egg_probe_options* opt, egg_smoothness_report* out) {
    return guard([&] {
        need(reinterpret_cast<const void*>(f), "function");
        need(out, "out");
        egg_probe_options o;
        egg_probe_options_default(&o);
        if (opt) o = *opt;
        egg::ScalarPath c;
        if (control) c = [control, control_user](double t) { return control(t, control_user); };
        const egg::SmoothnessReport r =
            egg::holder_exponent([f, user](double t) { return f(t, user); }, order, c, probe_from(o));
        fill_report(r, out);
    });
}

egg_status egg_smoothness_scan_run(const egg_domain* d, egg_seam seam, const char* component, uint64_t seed,
                                   const egg_probe_options* opt, int threads, egg_smoothness_scan** out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = nullptr;
        egg_probe_options o;
        egg_probe_options_default(&o);
        if (opt) o = *opt;
        egg::RegularityOptions r;
        r.probe = probe_from(o);
        r.max_order = o.max_order;
        r.paths = o.paths;
        r.junction_p1 = o.junction_p1;
        const egg::Seam s = static_cast<egg::Seam>(seam);
        const egg::ComponentSelector c =
            component && *component ? egg::parse_component(component) : egg::default_component(d->params, s);
        *out = new egg_smoothness_scan{r.max_order + 1, egg::regularity_scan(d->params, s, c, seed, r, threads)};
    });
}

size_t egg_smoothness_scan_size(const egg_smoothness_scan* s) { return s ? s->reports.size() : 0; }
size_t egg_smoothness_scan_paths(const egg_smoothness_scan* s) {
    return s && s->orders > 0 ? s->reports.size() / static_cast<size_t>(s->orders) : 0;
}

egg_status egg_smoothness_scan_record(const egg_smoothness_scan* s, size_t i, egg_smoothness_report* out) {
    return guard([&] {
        need(s, "scan");
        need(out, "out");
        if (i >= s->reports.size()) egg::fail(egg::ErrorKind::InvalidArgument, "record index out of range");
        fill_report(s->reports[i], out);
    });
}

egg_status egg_smoothness_scan_classify(const egg_smoothness_scan* s, size_t path, egg_regularity* out) {
    return guard([&] {
        need(s, "scan");
        need(out, "out");
        if (path >= egg_smoothness_scan_paths(s)) egg::fail(egg::ErrorKind::InvalidArgument, "path index out of range");
        const auto first = s->reports.begin() + static_cast<long>(path) * s->orders;
        const egg::RegularityClass c =
            egg::classify_regularity(std::vector<egg::SmoothnessReport>(first, first + s->orders));
        out->continuous_order = c.continuous_order;
        out->exponent = c.exponent;
        out->inconclusive = c.inconclusive ? 1 : 0;
        copy_text(out->label, sizeof out->label, c.label);
    });
}

void egg_smoothness_scan_destroy(egg_smoothness_scan* s) { delete s; }

egg_status egg_verify_run(const egg_domain* d, uint64_t seed, int threads, egg_verify** out) {
    return guard([&] {
        check_domain(d);
        need(out, "out");
        *out = nullptr;
        *out = new egg_verify{egg::run_verification(d->params, seed, threads)};
    });
}

size_t egg_verify_size(const egg_verify* v) { return v ? v->checks.size() : 0; }

egg_status egg_verify_record(const egg_verify* v, size_t i, egg_check* out) {
    return guard([&] {
        need(v, "verify result");
        need(out, "out");
        if (i >= v->checks.size()) egg::fail(egg::ErrorKind::InvalidArgument, "record index out of range");
        const egg::CheckResult& c = v->checks[i];
        copy_text(out->name, sizeof out->name, c.name);
        out->passed = c.passed ? 1 : 0;
        out->measured = c.measured;
        out->threshold = c.threshold;
        copy_text(out->detail, sizeof out->detail, c.detail);
    });
}

void egg_verify_destroy(egg_verify* v) { delete v; }

}  // extern "C"
