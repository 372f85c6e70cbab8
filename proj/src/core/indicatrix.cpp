#include "indicatrix.hpp"

#include <algorithm>
#include <sstream>

#include "jet.hpp"
#include "roots.hpp"

namespace egg {

const char* curve_branch_name(CurveBranch b) { return b == CurveBranch::Lower ? "LOWER" : "UPPER"; }

const char* convexity_name(Convexity c) {
    switch (c) {
        case Convexity::Convex: return "CONVEX";
        case Convexity::Concave: return "CONCAVE";
        case Convexity::Affine: return "AFFINE";
        case Convexity::Mixed: return "MIXED";
    }
    return "UNKNOWN";
}

namespace {

void check_p1(double p1) {
    if (!(p1 > 0.0 && p1 < 1.0)) {
        std::ostringstream os;
        os << "reference coordinate p1 must lie in (0, 1) (got " << p1 << ")";
        fail(ErrorKind::Domain, os.str());
    }
}

// x = 1 + q^2 a^{2-4m} - q a^{-2m} - q a^{2-2m}
// y = (p/m)^2 (m/a - (m-1) a - q a^{1-2m})^2
template <class T>
T upper_x(double m, double q, const T& a) {
    return 1.0 + q * q * power(a, 2.0 - 4.0 * m) - q * power(a, -2.0 * m) - q * power(a, 2.0 - 2.0 * m);
}
template <class T>
T upper_y(double m, double p, double q, const T& a) {
    const T inner = m * power(a, -1.0) - (m - 1.0) * a - q * power(a, 1.0 - 2.0 * m);
    return (p / m) * (p / m) * (inner * inner);
}

}  // namespace

ParamRange kcurve_range(const DomainParams& d, double p1, CurveBranch b) {
    check_p1(p1);
    if (b == CurveBranch::Lower) return {1.0, 1.0 / (1.0 - abs_pow(p1, 2.0 * d.m()))};
    return {p1, 1.0};
}

KCurveSample kcurve_sample(const DomainParams& d, double p1, CurveBranch b, double alpha) {
    const ParamRange r = kcurve_range(d, p1, b);
    const double tol = 8.0 * kEps * r.hi;
    if (!(alpha >= r.lo - tol && alpha <= r.hi + tol)) {
        std::ostringstream os;
        os << curve_branch_name(b) << " parameter " << alpha << " outside [" << r.lo << ", " << r.hi << "]";
        fail(ErrorKind::InvalidArgument, os.str());
    }
    const double m = d.m();
    const double q = abs_pow(p1, 2.0 * m);
    KCurveSample s;
    s.branch = b;
    s.alpha = alpha;
    if (b == CurveBranch::Lower) {
        const double w = sq(1.0 - q);
        s.x = w * alpha;
        s.y = w * (1.0 - alpha * (1.0 - q)) / (m * m * abs_pow(p1, 2.0 * m - 2.0));
        if (s.y < 0.0 && s.y > -tol) s.y = 0.0;
    } else {
        s.x = upper_x(m, q, alpha);
        s.y = upper_y(m, p1, q, alpha);
        if (s.x < 0.0 && s.x > -tol) s.x = 0.0;
    }
    return s;
}

std::vector<KCurveSample> kcurve_grid(const DomainParams& d, double p1, CurveBranch b, int count) {
    if (count < 2) fail(ErrorKind::InvalidArgument, "k-curve grid needs at least 2 samples");
    const ParamRange r = kcurve_range(d, p1, b);
    std::vector<KCurveSample> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double u = static_cast<double>(i) / (count - 1);
        const double s = b == CurveBranch::Upper ? 0.5 * (1.0 - std::cos(M_PI * u)) : u;
        double a = r.lo + (r.hi - r.lo) * s;
        if (i == 0) a = r.lo;
        if (i == count - 1) a = r.hi;
        out.push_back(kcurve_sample(d, p1, b, a));
    }
    return out;
}

CurveDerivatives upper_curve_derivatives(const DomainParams& d, double p1, double alpha) {
    check_p1(p1);
    const double m = d.m();
    const double q = abs_pow(p1, 2.0 * m);
    const Jet<3> a = Jet<3>::variable(alpha);
    const Jet<3> x = upper_x(m, q, a);
    const Jet<3> y = upper_y(m, p1, q, a);
    CurveDerivatives r;
    for (int k = 0; k <= 3; ++k) {
        r.x[k] = x.derivative(k);
        r.y[k] = y.derivative(k);
    }
    return r;
}

JoiningDerivatives joining_point_derivatives(const DomainParams& d, double p1) {
    check_p1(p1);
    const double m = d.m();
    if (m == 0.5) fail(ErrorKind::Unsupported, "joining-point derivatives are singular at m = 1/2 (dx/dalpha = 0)");
    const CurveDerivatives c = upper_curve_derivatives(d, p1, 1.0);
    const double q = abs_pow(p1, 2.0 * m);
    JoiningDerivatives j;
    j.x_join = c.x[0];
    j.y_join = c.y[0];
    j.xdot = c.x[1];
    j.d2_numerator = c.x[1] * c.y[2] - c.y[1] * c.x[2];
    j.d2_match = j.d2_numerator / (c.x[1] * c.x[1] * c.x[1]);
    j.d3_numerator = c.x[1] * c.y[3] - c.y[1] * c.x[3];
    j.d3_jump = j.d3_numerator / sq(sq(c.x[1]));
    j.closed_form_numerator =
        16.0 * abs_pow(p1, 2.0 * m + 2.0) * sq(1.0 - q) * sq(2.0 * m - 1.0) * (m - 1.0) / m;
    return j;
}

double upper_alpha_for_x(const DomainParams& d, double p1, double x) {
    check_p1(p1);
    const double m = d.m();
    const double q = abs_pow(p1, 2.0 * m);
    auto f = [&](double a) {
        const Jet<1> v = upper_x(m, q, Jet<1>::variable(a));
        return std::pair<double, double>{v.c[0] - x, v.c[1]};
    };
    return solve_bracketed(f, p1, 1.0).x;
}

double indicatrix_y(const DomainParams& d, double p1, double x) {
    check_p1(p1);
    const double m = d.m();
    const double q = abs_pow(p1, 2.0 * m);
    const double w = sq(1.0 - q);
    if (x >= w) return w * (1.0 - x / w * (1.0 - q)) / (m * m * abs_pow(p1, 2.0 * m - 2.0));
    if (x < 0.0) fail(ErrorKind::InvalidArgument, "square coordinate x must be non-negative");
    const double a = upper_alpha_for_x(d, p1, x);
    return upper_y(m, p1, q, a);
}

ConvexityVerdict square_convexity_check(const DomainParams& d, double p1, CurveBranch b, int samples) {
    if (samples < 3) fail(ErrorKind::InvalidArgument, "convexity check needs at least 3 samples");
    const ParamRange r = kcurve_range(d, p1, b);
    std::vector<KCurveSample> s;
    s.reserve(samples);
    for (int i = 0; i < samples; ++i)
        s.push_back(kcurve_sample(d, p1, b, r.lo + (r.hi - r.lo) * (i + 1.0) / (samples + 1.0)));
    std::sort(s.begin(), s.end(), [](const KCurveSample& a, const KCurveSample& c) { return a.x < c.x; });
    double min_dd = std::numeric_limits<double>::infinity();
    double max_dd = -min_dd;
    double max_sd = 0.0;
    for (int i = 1; i + 1 < samples; ++i) {
        const double h0 = s[i].x - s[i - 1].x;
        const double h1 = s[i + 1].x - s[i].x;
        if (!(h0 > 0.0 && h1 > 0.0)) fail(ErrorKind::Numerical, "k-curve samples are not strictly ordered in x");
        const double dd = 2.0 * ((s[i + 1].y - s[i].y) / h1 - (s[i].y - s[i - 1].y) / h0) / (h0 + h1);
        min_dd = std::min(min_dd, dd);
        max_dd = std::max(max_dd, dd);
        max_sd = std::max(max_sd, std::abs(dd) * sq(0.5 * (h0 + h1)));
    }
    ConvexityVerdict v;
    v.samples = samples;
    v.max_abs_second_difference = max_sd;
    if (max_sd < 1e-12) {
        v.verdict = Convexity::Affine;
        v.margin = 1e-12 - max_sd;
    } else if (min_dd > 0.0) {
        v.verdict = Convexity::Convex;
        v.margin = min_dd;
    } else if (max_dd < 0.0) {
        v.verdict = Convexity::Concave;
        v.margin = -max_dd;
    } else {
        v.verdict = Convexity::Mixed;
        v.margin = -std::min(std::abs(min_dd), std::abs(max_dd));
    }
    return v;
}

}  // namespace egg
