#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "curvature.hpp"
#include "indicatrix.hpp"
#include "kobayashi.hpp"
#include "wu_fitting.hpp"
#include "wu_tensor.hpp"

namespace egg {

namespace {

template <class... A>
std::string fmt(const char* f, A... a) {
    char buf[320];
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

std::string with_m(const char* what, const DomainParams& d) {
    std::ostringstream os;
    os << what << " (m=" << d.m() << ", n=" << d.n() << ")";
    return os.str();
}

CheckResult make(std::string name, double measured, double threshold, bool passed, std::string detail = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.measured = measured;
    r.threshold = threshold;
    r.passed = passed;
    r.detail = std::move(detail);
    return r;
}

CheckResult not_applicable(std::string name, const std::string& why) {
    return make(std::move(name), 0.0, 0.0, true, "not applicable: " + why);
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double fit_rel(const WuEllipsoidDiag& a, const WuEllipsoidDiag& b) { return std::max(rel(a.r1, b.r1), rel(a.r2, b.r2)); }

// point with reference value q = |z1|^{2m} / (1 - |zhat|^2) and |zhat| = rho
PointCoords point_with_q(const DomainParams& d, double q, double rho, Rng& rng) {
    const int n = d.n();
    CVector z(n);
    z(0) = std::pow(q * (1.0 - rho * rho), 1.0 / (2.0 * d.m())) * rng.unit_phase();
    z.tail(n - 1) = random_direction(n - 1, rng).v * rho;
    return PointCoords(z);
}

// M+ points for m > 1; generic off-seam points for m = 1
std::vector<PointCoords> plus_points(const DomainParams& d, Rng& rng, int count) {
    std::vector<PointCoords> pts;
    while (static_cast<int>(pts.size()) < count) {
        const double q = d.m() > 1.0 ? rng.uniform(0.55, 0.9) : rng.uniform(0.05, 0.9);
        PointCoords z = point_with_q(d, q, rng.uniform(0.0, 0.7), rng);
        if (d.m() == 1.0 || classify_region(d, z) == RegionLabel::MPlus) pts.push_back(z);
    }
    return pts;
}

double matrix_rel(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff(); }

}  // namespace

CheckResult check_constant_curvature(const DomainParams& d, std::uint64_t seed, int points, int directions, double tol) {
    const std::string name = with_m("constant holomorphic curvature -2", d);
    if (d.m() < 1.0) return not_applicable(name, "no constant-curvature region for m < 1");
    Rng rng(seed);
    const std::vector<PointCoords> pts = plus_points(d, rng, points);
    double worst = 0.0;
    for (const PointCoords& z : pts) {
        const CurvatureTensor t = curvature_tensor(d, z);
        for (int k = 0; k < directions; ++k)
            worst = std::max(worst, std::abs(t.holomorphic_sectional(random_direction(d.n(), rng).v) + 2.0));
    }
    return make(name, worst, tol, worst <= tol,
                fmt("max |H + 2| over %d %s points x %d directions", points, d.m() > 1.0 ? "M+" : "sampled", directions));
}

CheckResult check_fit_oracle(const DomainParams& d, double p1, int samples, double tol, double containment_tol) {
    const std::string name = fmt("fit vs oracle (m=%g, p1=%g)", d.m(), p1);
    const WuEllipsoidDiag f = fit_reference(d, p1);
    const WuEllipsoidDiag o = fit_oracle(d, p1, samples);
    const double err = fit_rel(f, o);
    const double viol = containment_violation(d, p1, f, samples);
    return make(name, err, tol, err <= tol && viol <= containment_tol,
                fmt("%s case; relative error of (r1, r2); containment violation %.3e (limit %.0e)",
                    fit_case_name(fit_case(d, p1)), viol, containment_tol));
}

CheckResult check_m0_continuity(const DomainParams& d, double tol) {
    const std::string name = with_m("M- / M+ closed forms agree on M0", d);
    if (!d.has_m0_seam()) return not_applicable(name, "M0 is a seam only for m > 1");
    const double p0 = d.m0_radius();
    const double x = solve_X(d, p0);
    const WuEllipsoidDiag a = fit_upper_contact(d, p0);
    const WuEllipsoidDiag b = fit_lower_line(d, p0);
    const double err = std::max(fit_rel(a, b), std::abs(x - 1.0));
    return make(name, err, tol, err <= tol, fmt("p0 = %.17g, X(p0) = %.17g", p0, x));
}

CheckResult check_origin_continuity(const DomainParams& d, double tol) {
    const std::string name = with_m("reference fit tends to the origin value", d);
    const WuEllipsoidDiag o = fit_at_origin(d);
    const double ps[3] = {1e-3, 1e-6, 1e-9};
    double errs[3];
    for (int k = 0; k < 3; ++k) errs[k] = fit_rel(fit_reference(d, ps[k]), o);
    const bool decreasing = errs[1] <= errs[0] && errs[2] <= errs[1] + 1e-15;
    return make(name, errs[2], tol, decreasing && errs[2] <= tol,
                fmt("origin (%.6g, %.6g); relative gaps at p1 = 1e-3, 1e-6, 1e-9: %.2e, %.2e, %.2e", o.r1, o.r2,
                    errs[0], errs[1], errs[2]));
}

CheckResult check_invariance(const DomainParams& d, std::uint64_t seed, int triples, double value_tol,
                             double tensor_tol) {
    const std::string name = with_m("automorphism invariance", d);
    Rng rng(seed);
    double kerr = 0.0, werr = 0.0, terr = 0.0;
    for (int k = 0; k < triples; ++k) {
        const PointCoords p = random_point(d, rng, 0.9);
        const TangentVector v = random_direction(d.n(), rng);
        const Automorphism a = random_automorphism(d, rng);
        const PointCoords ap = a.apply(d, p);
        const CMatrix j = a.jacobian(d, p);
        const TangentVector av(j * v.v);
        kerr = std::max(kerr, rel(kobayashi(d, ap, av).norm, kobayashi(d, p, v).norm));
        werr = std::max(werr, rel(wu_norm(d, ap, av.v), wu_norm(d, p, v.v)));
        const CMatrix pulled = j.transpose() * wu_matrix(d, ap) * j.conjugate();
        terr = std::max(terr, matrix_rel(pulled, wu_matrix(d, p)));
    }
    const double measured = std::max(kerr, werr);
    return make(name, measured, value_tol, measured <= value_tol && terr <= tensor_tol,
                fmt("%d triples; kobayashi %.2e, wu %.2e, tensor functoriality %.2e (limit %.0e)", triples, kerr, werr,
                    terr, tensor_tol));
}

CheckResult check_domination(const DomainParams& d, std::uint64_t seed, int samples, double tol) {
    const std::string name = with_m("wu <= kobayashi", d);
    Rng rng(seed);
    double worst = -std::numeric_limits<double>::infinity();
    double ratio_min = std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const PointCoords p = random_point(d, rng, 0.95);
        const TangentVector v = random_direction(d.n(), rng);
        const double kn = kobayashi(d, p, v).norm;
        const double wn = wu_norm(d, p, v.v);
        worst = std::max(worst, wn - kn);
        ratio_min = std::min(ratio_min, wn / kn);
    }
    return make(name, worst, tol, worst <= tol,
                fmt("%d samples; max (wu - kobayashi); min wu/kobayashi %.6f", samples, ratio_min));
}

CheckResult check_junction(const DomainParams& d, double p1) {
    const std::string name = fmt("branch junction (m=%g, p1=%g)", d.m(), p1);
    const int n = d.n();
    // direction with u = m |v1| / |vhat| = s
    auto vec = [&](double s) {
        CVector v = CVector::Zero(n);
        v(0) = s / d.m();
        v(1) = 1.0;
        return TangentVector(v);
    };
    auto low = [&](double s) { return kobayashi_lower_formula(d, p1, vec(s)).norm; };
    auto up = [&](double s) { return kobayashi_upper_formula(d, p1, vec(s)).norm; };
    const double value_gap = rel(up(p1), low(p1));
    const double h = 1e-5;
    const double dl = (3.0 * low(p1) - 4.0 * low(p1 - h) + low(p1 - 2.0 * h)) / (2.0 * h);
    const double du = (-3.0 * up(p1) + 4.0 * up(p1 + h) - up(p1 + 2.0 * h)) / (2.0 * h);
    const double slope_gap = std::abs(du - dl);
    bool ok = value_gap <= 1e-10 && slope_gap <= 1e-6;
    std::string detail = fmt("value gap %.2e (limit 1e-10), one-sided slope gap %.2e (limit 1e-6)", value_gap, slope_gap);
    if (d.m() == 0.5) {
        detail += "; indicatrix joint degenerate at m = 1/2, derivatives not compared";
        return make(name, slope_gap, 1e-6, ok, detail);
    }
    const JoiningDerivatives j = joining_point_derivatives(d, p1);
    const double d3_err = d.m() == 1.0 ? std::abs(j.d3_numerator - j.closed_form_numerator)
                                       : rel(j.d3_numerator, j.closed_form_numerator);
    ok = ok && std::abs(j.d2_match) < 1e-8 && d3_err <= 1e-6;
    detail += fmt("; d2 mismatch %.2e (limit 1e-8); d3 numerator %.12g vs closed form %.12g, error %.2e (limit 1e-6);"
                  " d3 jump %.6g",
                  std::abs(j.d2_match), j.d3_numerator, j.closed_form_numerator, d3_err, j.d3_jump);
    return make(name, slope_gap, 1e-6, ok, detail);
}

CheckResult check_kahler_point(const DomainParams& d, const PointCoords& z, bool expect_kahler, double threshold) {
    std::ostringstream os;
    os << (expect_kahler ? "Kahler at " : "non-Kahler at ") << "(";
    for (int k = 0; k < d.n(); ++k) os << (k ? ", " : "") << z.z(k).real();
    os << ") (m=" << d.m() << ", " << region_name(classify_region(d, z)) << ")";
    const double def = kahler_defect(d, z);
    const bool ok = expect_kahler ? def < threshold : def > threshold;
    return make(os.str(), def, threshold, ok, expect_kahler ? "kahler defect below threshold" : "kahler defect above threshold");
}

CheckResult check_kahler_plus(const DomainParams& d, std::uint64_t seed, int points, double tol) {
    const std::string name = with_m("Kahler on M+", d);
    if (d.m() < 1.0) return not_applicable(name, "no Kahler region for m < 1");
    Rng rng(seed);
    double worst = 0.0;
    for (const PointCoords& z : plus_points(d, rng, points)) worst = std::max(worst, kahler_defect(d, z));
    return make(name, worst, tol, worst < tol, fmt("max kahler defect over %d points", points));
}

CheckResult check_smoothness_calibration(double tol) {
    double worst = 0.0;
    std::string detail;
    for (double a : {0.3, 0.5, 0.8}) {
        const SmoothnessReport r = holder_exponent([a](double t) { return std::pow(std::abs(t), a); }, 0, {});
        worst = std::max(worst, std::abs(r.exponent - a));
        detail += fmt("%s|t|^%.1f -> %.4f", detail.empty() ? "" : ", ", a, r.exponent);
    }
    return make("Holder probe calibration", worst, tol, worst <= tol, detail);
}

namespace {

struct Expectation {
    bool assert_it = true;
    int order = -1;  // -1: smooth through the probed orders
    bool kink = false;
    double exponent = 1.0;
    double tol = 0.0;
    std::string text;
};

Expectation expected_regularity(const DomainParams& d, Seam seam, int max_order) {
    Expectation e;
    const double m = d.m();
    if (seam == Seam::MZero) {
        e.order = 1;
        e.kink = true;
        e.text = "C^1 with a jump in derivative 2";
        return e;
    }
    if (seam == Seam::Junction) {
        if (m == 1.0) {
            e.text = "smooth (the ball)";
            return e;
        }
        e.order = 2;
        e.kink = true;
        e.text = "C^2 with a jump in derivative 3";
        return e;
    }
    if (m == 0.5) {
        e.assert_it = false;
        e.text = "continuous; modulus not asserted";
        return e;
    }
    if (m < 1.0) {
        e.order = 1;
        e.exponent = 2.0 * m - 1.0;
        e.tol = 0.1;
        e.text = fmt("C^{1,%.2f}", e.exponent);
        if (e.exponent < 0.15 || e.exponent > 0.85) e.assert_it = false;
        return e;
    }
    const double twom = 2.0 * m;
    const double fl = std::floor(twom);
    if (m == std::floor(m)) {
        e.text = "analytic";
        return e;
    }
    if (twom == fl) {
        e.order = static_cast<int>(fl) - 1;
        e.kink = true;
        e.text = fmt("C^{%d,1} with a jump in derivative %d", e.order, e.order + 1);
    } else {
        e.order = static_cast<int>(fl);
        e.exponent = twom - fl;
        e.tol = 0.15;
        e.text = fmt("C^{%d,%.2f}", e.order, e.exponent);
        if (e.exponent < 0.15 || e.exponent > 0.85) e.assert_it = false;
    }
    if (e.order > std::min(max_order, 2)) e.assert_it = false;
    return e;
}

}  // namespace

CheckResult check_seam_regularity(const DomainParams& d, Seam seam, std::uint64_t seed, int threads) {
    const std::string name = fmt("regularity across %s (m=%g, n=%d)", seam_name(seam), d.m(), d.n());
    if (seam == Seam::Z && !d.thin_set_is_seam()) return not_applicable(name, "Z is not a seam for m = 1");
    if (seam == Seam::MZero && !d.has_m0_seam()) return not_applicable(name, "M0 is a seam only for m > 1");
    if (seam == Seam::Junction && d.m() == 0.5) return not_applicable(name, "the indicatrix joint is degenerate at m = 1/2");
    RegularityOptions opt;
    opt.paths = seam == Seam::Junction ? 1 : 2;
    // keep p1^{2m} at 0.3^4: for large m a fixed p1 pushes the joint's curvature
    // scale below the probe steps
    opt.junction_p1 = std::max(0.3, std::pow(0.3, 2.0 / d.m()));
    const ComponentSelector c = default_component(d, seam);
    const std::vector<SmoothnessReport> rs = regularity_scan(d, seam, c, seed, opt, threads);
    const Expectation e = expected_regularity(d, seam, opt.max_order);
    const int orders = opt.max_order + 1;
    bool ok = true;
    double measured = 0.0;
    std::string labels;
    for (std::size_t p = 0; p < rs.size(); p += orders) {
        const std::vector<SmoothnessReport> one(rs.begin() + p, rs.begin() + p + orders);
        const RegularityClass rc = classify_regularity(one);
        labels += (labels.empty() ? "" : "; ") + rc.label;
        if (rc.inconclusive) {
            ok = false;
            continue;
        }
        if (rc.continuous_order != e.order) ok = false;
        if (e.order >= 0) {
            const SmoothnessReport& r = one[e.order];
            if (e.kink) {
                const double ratio = r.jump / std::max(r.noise, 1e-300);
                measured = p == 0 ? ratio : std::min(measured, ratio);
                if (r.verdict != SmoothnessVerdict::Kink) ok = false;
            } else {
                const double err = std::abs(rc.exponent - e.exponent);
                measured = std::max(measured, err);
                if (err > e.tol) ok = false;
            }
        }
    }
    double threshold = e.kink ? 10.0 : e.tol;
    std::string detail = "component " + c.str() + "; expected " + e.text + "; found " + labels;
    if (e.kink) detail += "; measured = jump / noise";
    if (!e.assert_it) {
        detail += "; reported only";
        ok = true;
        threshold = 0.0;
    }
    return make(name, measured, threshold, ok, detail);
}

CheckResult check_curvature_negative(const DomainParams& d, std::uint64_t seed, double bound, int threads) {
    const std::string name = with_m("holomorphic curvature negative", d);
    const std::vector<CurvatureRecord> recs = curvature_scan(d, GridSpec{}, seed, threads);
    double upper = -std::numeric_limits<double>::infinity();
    double lower = std::numeric_limits<double>::infinity();
    int used = 0, skipped = 0;
    for (const CurvatureRecord& r : recs) {
        if (r.skipped) {
            ++skipped;
            continue;
        }
        ++used;
        upper = std::max(upper, r.max_sec);
        lower = std::min(lower, r.min_sec);
    }
    return make(name, upper, bound, used > 0 && upper <= bound,
                fmt("%d points (%d skipped near seams); curvature range [%.4f, %.4f]", used, skipped, lower, upper));
}

std::vector<CheckResult> run_verification(const DomainParams& d, std::uint64_t seed, int threads) {
    std::vector<CheckResult> out;
    out.push_back(check_constant_curvature(d, seed));
    for (double p1 : {0.2, 0.3, 0.5, 0.8, 0.84, 0.9}) out.push_back(check_fit_oracle(d, p1));
    out.push_back(check_m0_continuity(d));
    out.push_back(check_origin_continuity(d));
    out.push_back(check_invariance(d, seed));
    out.push_back(check_domination(d, seed));
    out.push_back(check_junction(d));
    out.push_back(check_kahler_plus(d, seed));
    if (d.m() != 1.0) {
        CVector z = CVector::Zero(d.n());
        if (d.m() < 1.0) {
            z(0) = 0.5;
            z(1) = 0.2;
        } else {
            z(0) = 0.4;
            z(1) = 0.1;
        }
        // the defect scales with |m - 1|; the 1e-3 level is pinned for m far from 1
        const double thr = std::abs(d.m() - 1.0) >= 0.25 ? 1e-3 : 1e-6;
        out.push_back(check_kahler_point(d, PointCoords(z), false, thr));
    }
    out.push_back(check_smoothness_calibration());
    for (Seam s : {Seam::Z, Seam::MZero, Seam::Junction}) out.push_back(check_seam_regularity(d, s, seed, threads));
    out.push_back(check_curvature_negative(d, seed, -0.1, threads));
    return out;
}

}  // namespace egg
