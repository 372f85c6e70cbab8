#include "wu_fitting.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "indicatrix.hpp"
#include "roots.hpp"

namespace egg {

const char* fit_case_name(FitCase c) {
    switch (c) {
        case FitCase::Chord: return "CHORD";
        case FitCase::LowerLine: return "LOWER_LINE";
        case FitCase::UpperContact: return "UPPER_CONTACT";
        case FitCase::OriginLimit: return "ORIGIN_LIMIT";
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

}  // namespace

double solve_X(const DomainParams& d, double p1, double s) {
    const double m = d.m();
    if (!(m > 1.0)) fail(ErrorKind::Configuration, "the contact equation only applies for m > 1");
    if (!(s > 0.0 && s <= 1.0)) fail(ErrorKind::Configuration, "scale s must lie in (0, 1]");
    check_p1(p1);
    const double q = abs_pow(p1, 2.0 * m) / (s * s);
    if (q > 0.5 * (1.0 + 1e-13)) {
        std::ostringstream os;
        os << "contact equation has no root in (0, 1]: point is not in M- (p1^{2m}/s^2 = " << q << ")";
        fail(ErrorKind::Configuration, os.str());
    }
    if (q >= 0.5 * (1.0 - 4.0 * kEps)) return 1.0;
    // X = P xi with P = q^{1/m}; the scaled equation is analytic in P and O(1)
    const double P = abs_pow(q, 1.0 / m);
    auto g = [&](double xi) {
        const double xm1 = abs_pow(xi, m - 1.0);
        const double xm = xm1 * xi;
        const double val = abs_pow(xi, 2.0 * m - 1.0) - (m + 1.0) * xm1 + (m - 2.0) * P * xm + 2.0 * P;
        const double der = (2.0 * m - 1.0) * abs_pow(xi, 2.0 * m - 2.0) - (m + 1.0) * (m - 1.0) * xm1 / xi +
                           (m - 2.0) * m * P * xm1;
        return std::pair<double, double>{val, der};
    };
    const double hi = 1.0 / P;
    if (g(hi).first <= 0.0) return 1.0;
    return std::min(1.0, P * solve_bracketed(g, 1.0, hi).x);
}

FitCase fit_case(const DomainParams& d, double p1) {
    if (p1 == 0.0) return FitCase::OriginLimit;
    check_p1(p1);
    if (d.m() <= 1.0) return FitCase::Chord;
    return abs_pow(p1, 2.0 * d.m()) >= 0.5 ? FitCase::LowerLine : FitCase::UpperContact;
}

WuEllipsoidDiag fit_at_origin(const DomainParams& d) {
    const double m = d.m();
    if (m <= 1.0) return {1.0, 1.0};
    return {std::pow(m + 1.0, 1.0 / m) / 2.0, (m + 1.0) / (2.0 * m)};
}

WuEllipsoidDiag fit_lower_line(const DomainParams& d, double p1) {
    check_p1(p1);
    const double m = d.m();
    const double q = abs_pow(p1, 2.0 * m);
    return {m * m * abs_pow(p1, 2.0 * m - 2.0) / sq(1.0 - q), 1.0 / (1.0 - q)};
}

WuEllipsoidDiag fit_upper_contact(const DomainParams& d, double p1) {
    check_p1(p1);
    const double m = d.m();
    const double q = abs_pow(p1, 2.0 * m);
    const double X = solve_X(d, p1, 1.0);
    const double F = m * abs_pow(X, m - 1.0) - (m - 1.0) * abs_pow(X, m) - q;
    const double pref = abs_pow(X, 2.0 * m - 1.0) / (2.0 * F * F);
    return {pref * m * m / (p1 * p1), pref * F / q};
}

WuEllipsoidDiag fit_reference(const DomainParams& d, double p1) {
    switch (fit_case(d, p1)) {
        case FitCase::OriginLimit: return fit_at_origin(d);
        case FitCase::Chord: {
            const double q = abs_pow(p1, 2.0 * d.m());
            return {1.0 / sq(1.0 - p1 * p1), 1.0 / (1.0 - q)};
        }
        case FitCase::LowerLine: return fit_lower_line(d, p1);
        case FitCase::UpperContact: return fit_upper_contact(d, p1);
    }
    return {};
}

ContactPoint contact_point(const DomainParams& d, double p1) {
    if (fit_case(d, p1) != FitCase::UpperContact)
        fail(ErrorKind::Configuration, "an upper-branch contact point exists only in M- (m > 1, p1^{2m} < 1/2)");
    const double a = std::sqrt(solve_X(d, p1, 1.0));
    const KCurveSample s = kcurve_sample(d, p1, CurveBranch::Upper, std::clamp(a, p1, 1.0));
    return {s.x, s.y, a};
}

namespace {

struct Pt {
    double x, y, alpha;
    bool upper;
};

double cross(const Pt& o, const Pt& a, const Pt& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    if (pts.size() < 3) return pts;
    std::vector<Pt> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

struct OracleSolution {
    WuEllipsoidDiag fit;
    double contact_alpha = -1.0;
};

OracleSolution best_enclosing(const std::vector<Pt>& hull) {
    constexpr double feas_tol = 1e-15;
    auto feasible = [&](double r1, double r2) {
        for (const Pt& v : hull)
            if (r1 * v.y + r2 * v.x > 1.0 + feas_tol) return false;
        return true;
    };
    OracleSolution best;
    double best_vol = -1.0;
    auto consider = [&](double r1, double r2) {
        if (!(r1 > 0.0 && r2 > 0.0) || !std::isfinite(r1) || !std::isfinite(r2)) return;
        if (r1 * r2 <= best_vol || !feasible(r1, r2)) return;
        best_vol = r1 * r2;
        best.fit = {r1, r2};
    };
    const std::size_t nh = hull.size();
    for (std::size_t i = 0; i < nh; ++i) {
        const Pt& a = hull[i];
        if (a.x > 0.0 && a.y > 0.0) consider(0.5 / a.y, 0.5 / a.x);
        const Pt& b = hull[(i + 1) % nh];
        const double det = a.y * b.x - b.y * a.x;
        if (det != 0.0) consider((b.x - a.x) / det, (a.y - b.y) / det);
    }
    double top = -1.0;
    for (const Pt& v : hull) {
        const double val = best.fit.r1 * v.y + best.fit.r2 * v.x;
        if (v.upper && val > top) {
            top = val;
            best.contact_alpha = v.alpha;
        }
    }
    return best;
}

void add_upper(const DomainParams& d, double p1, double lo, double hi, int count, std::vector<Pt>& pts) {
    for (int i = 0; i < count; ++i) {
        const double a = count == 1 ? lo : lo + (hi - lo) * i / (count - 1.0);
        const KCurveSample s = kcurve_sample(d, p1, CurveBranch::Upper, a);
        pts.push_back({s.x, s.y, a, true});
    }
}

void add_lower(const DomainParams& d, double p1, int count, std::vector<Pt>& pts) {
    const ParamRange r = kcurve_range(d, p1, CurveBranch::Lower);
    for (int i = 0; i < count; ++i) {
        const double a = i == count - 1 ? r.hi : r.lo + (r.hi - r.lo) * i / (count - 1.0);
        const KCurveSample s = kcurve_sample(d, p1, CurveBranch::Lower, a);
        pts.push_back({s.x, s.y, a, false});
    }
}

}  // namespace

WuEllipsoidDiag fit_oracle(const DomainParams& d, double p1, int samples) {
    check_p1(p1);
    if (samples < 16) fail(ErrorKind::InvalidArgument, "oracle needs at least 16 samples");
    const int nu = samples / 2;
    std::vector<Pt> pts;
    pts.push_back({0.0, 0.0, 0.0, false});
    add_lower(d, p1, samples - nu, pts);
    add_upper(d, p1, p1, 1.0, nu, pts);
    std::vector<Pt> hull = convex_hull(pts);
    OracleSolution sol = best_enclosing(hull);
    // the objective is flat at the optimum, so a uniform grid only resolves r to
    // about the spacing; zoom the sampling onto the contact. Below ~1e-8 the
    // curve's bending drops under rounding noise and the hull stops improving.
    double spacing = (1.0 - p1) / (nu - 1.0);
    for (int level = 0; level < 8 && sol.contact_alpha >= 0.0 && spacing > 1e-8; ++level) {
        const double lo = std::max(p1, sol.contact_alpha - 8.0 * spacing);
        const double hi = std::min(1.0, sol.contact_alpha + 8.0 * spacing);
        constexpr int kZoom = 513;
        add_upper(d, p1, lo, hi, kZoom, hull);
        hull = convex_hull(hull);
        sol = best_enclosing(hull);
        spacing = (hi - lo) / (kZoom - 1.0);
    }
    return sol.fit;
}

double containment_violation(const DomainParams& d, double p1, const WuEllipsoidDiag& f, int samples) {
    check_p1(p1);
    if (samples < 4) fail(ErrorKind::InvalidArgument, "containment check needs at least 4 samples");
    std::vector<Pt> pts;
    add_lower(d, p1, samples / 2, pts);
    add_upper(d, p1, p1, 1.0, samples - samples / 2, pts);
    double worst = -std::numeric_limits<double>::infinity();
    for (const Pt& v : pts) worst = std::max(worst, f.r1 * v.y + f.r2 * v.x - 1.0);
    return worst;
}

}  // namespace egg
