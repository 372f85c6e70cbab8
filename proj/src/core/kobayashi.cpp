#include "kobayashi.hpp"

#include <sstream>

#include "roots.hpp"

namespace egg {

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Lower: return "LOWER";
        case Branch::Upper: return "UPPER";
        case Branch::Axis: return "AXIS";
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

// alpha and 1 - alpha^2 given t and tau = 1 - t. For t >= 1/2 the unknown is
// gamma = (1 - alpha^2) / tau in [0, 1], which keeps 1 - alpha^2 accurate near
// the junction t -> 1; otherwise alpha itself is solved on [sqrt(t), 1].
void solve_alpha_pair(double m, double t, double tau, double p1, double& alpha, double& oma2) {
    const double q = abs_pow(p1, 2.0 * m);
    if (t >= 0.5) {
        auto h = [&](double g) {
            const double base = 1.0 - tau * g;
            const double bp = abs_pow(base, m - 1.0);
            const double val = bp * (1.0 - g) - q;
            const double der = -(m - 1.0) * tau * (base > 0.0 ? bp / base : 0.0) * (1.0 - g) - bp;
            return std::pair<double, double>{val, der};
        };
        const double g = solve_bracketed(h, 0.0, 1.0).x;
        oma2 = tau * g;
        alpha = std::sqrt(1.0 - oma2);
        if (tau == 0.0) oma2 = 0.0;
        return;
    }
    auto f = [&](double a) {
        const double a2m2 = abs_pow(a, 2.0 * m - 2.0);
        const double val = a2m2 * (a * a - t) - tau * q;
        const double der = (2.0 * m - 2.0) * a2m2 / a * (a * a - t) + 2.0 * a * a2m2;
        return std::pair<double, double>{val, der};
    };
    alpha = solve_bracketed(f, std::sqrt(t), 1.0).x;
    oma2 = (1.0 - alpha) * (1.0 + alpha);
}

void upper_t(double m, double p1, double u, double& t, double& tau) {
    const double p2 = p1 * p1;
    const double R = std::sqrt(std::max(0.0, u * u + 4.0 * m * (m - 1.0) * p2));
    const double den = u * u + 2.0 * m * (m - 1.0) * p2 + u * R;
    t = 2.0 * m * m * p2 / den;
    double N;
    if (u * u - 2.0 * m * p2 >= 0.0)
        N = u * u - 2.0 * m * p2 + u * R;
    else
        N = 4.0 * m * m * p2 * (u * u - p2) / (u * R + 2.0 * m * p2 - u * u);
    tau = std::max(0.0, N / den);
    if (t > 1.0) t = 1.0;
}

double upper_norm(double m, double p1, double a1, const BranchParams& b) {
    if (b.tau == 0.0 || b.t >= 0.5) {
        const double gamma = b.tau > 0.0 ? b.one_minus_alpha2 / b.tau : (1.0 - abs_pow(p1, 2.0 * m));
        return m * b.alpha * a1 / (p1 * gamma * (m * b.tau + b.t));
    }
    return m * b.alpha * b.tau * a1 / (p1 * b.one_minus_alpha2 * (m * b.tau + b.t));
}

}  // namespace

double solve_alpha(double m, double t, double p1) {
    check_p1(p1);
    if (!(m >= 0.5)) fail(ErrorKind::InvalidArgument, "m must be >= 1/2");
    if (!(t >= 0.0 && t <= 1.0)) fail(ErrorKind::InvalidArgument, "t must lie in [0, 1]");
    if (t == 1.0) return 1.0;
    double a, oma2;
    solve_alpha_pair(m, t, 1.0 - t, p1, a, oma2);
    return a;
}

BranchParams branch_params(const DomainParams& d, double p1, const TangentVector& v) {
    check_p1(p1);
    check_dimension(d, v.v, "vector");
    const double m = d.m();
    const double a1 = std::abs(v.v(0));
    const double ah = std::sqrt(v.v.tail(d.n() - 1).squaredNorm());
    BranchParams b;
    if (ah == 0.0) {
        b.branch = Branch::Axis;
        b.u = std::numeric_limits<double>::infinity();
        b.tau = 1.0;
        b.alpha = p1;
        b.one_minus_alpha2 = 1.0 - p1 * p1;
        return b;
    }
    b.u = m * a1 / ah;
    if (b.u <= p1) {
        b.branch = Branch::Lower;
        return b;
    }
    b.branch = Branch::Upper;
    upper_t(m, p1, b.u, b.t, b.tau);
    solve_alpha_pair(m, b.t, b.tau, p1, b.alpha, b.one_minus_alpha2);
    return b;
}

MetricValue kobayashi_lower_formula(const DomainParams& d, double p1, const TangentVector& v) {
    check_p1(p1);
    check_dimension(d, v.v, "vector");
    const double m = d.m();
    const double q = abs_pow(p1, 2.0 * m);
    const double a1 = std::abs(v.v(0));
    const double ah2 = v.v.tail(d.n() - 1).squaredNorm();
    MetricValue r;
    r.squared = m * m * abs_pow(p1, 2.0 * m - 2.0) * a1 * a1 / sq(1.0 - q) + ah2 / (1.0 - q);
    r.norm = std::sqrt(r.squared);
    return r;
}

MetricValue kobayashi_upper_formula(const DomainParams& d, double p1, const TangentVector& v) {
    check_p1(p1);
    check_dimension(d, v.v, "vector");
    const double m = d.m();
    const double a1 = std::abs(v.v(0));
    const double ah = std::sqrt(v.v.tail(d.n() - 1).squaredNorm());
    if (ah == 0.0) {
        MetricValue r;
        r.norm = a1 / (1.0 - p1 * p1);
        r.squared = r.norm * r.norm;
        return r;
    }
    BranchParams b;
    b.u = m * a1 / ah;
    if (b.u < p1) fail(ErrorKind::InvalidArgument, "upper formula requires u >= p1");
    upper_t(m, p1, b.u, b.t, b.tau);
    solve_alpha_pair(m, b.t, b.tau, p1, b.alpha, b.one_minus_alpha2);
    MetricValue r;
    r.norm = upper_norm(m, p1, a1, b);
    r.squared = r.norm * r.norm;
    return r;
}

MetricValue kobayashi_reference(const DomainParams& d, double p1, const TangentVector& v) {
    const BranchParams b = branch_params(d, p1, v);
    const double a1 = std::abs(v.v(0));
    MetricValue r;
    switch (b.branch) {
        case Branch::Lower: return kobayashi_lower_formula(d, p1, v);
        case Branch::Axis: r.norm = a1 / (1.0 - p1 * p1); break;
        case Branch::Upper: r.norm = upper_norm(d.m(), p1, a1, b); break;
    }
    r.squared = r.norm * r.norm;
    return r;
}

MetricValue kobayashi_alt_upper(const DomainParams& d, double p1, const TangentVector& v) {
    check_p1(p1);
    check_dimension(d, v.v, "vector");
    const double m = d.m();
    const double a1 = std::abs(v.v(0));
    const double ah = std::sqrt(v.v.tail(d.n() - 1).squaredNorm());
    if (a1 == 0.0 || ah == 0.0 || m * a1 / ah <= p1)
        fail(ErrorKind::InvalidArgument, "alternate form needs v1 != 0, vhat != 0 and u > p1");
    const double p2 = p1 * p1;
    const double a12 = a1 * a1;
    const double ah2 = ah * ah;
    const double c = 1.0 - 1.0 / m;
    const double tt2 = 2.0 * a12 / (a12 + 2.0 * c * ah2 * p2 + a1 * std::sqrt(std::max(0.0, a12 + 4.0 * c * p2 * ah2)));
    const double lead = (1.0 - tt2 * ah2 * p2 / a12) * abs_pow(a1, 2.0 * m);
    const double quad = tt2 * ah2;
    auto F = [&](double x) {
        const double x2m = abs_pow(x, 2.0 * m);
        return std::pair<double, double>{lead * x2m + quad * x * x - 1.0,
                                         2.0 * m * lead * x2m / x + 2.0 * quad * x};
    };
    double hi = 1.0 / std::sqrt(quad);
    if (lead > 0.0) hi = std::min(hi, abs_pow(1.0 / lead, 1.0 / (2.0 * m)));
    const double x = solve_bracketed(F, 0.0, hi).x;
    const double den = a12 * x * x - p2 * abs_pow(x, 2.0 * m) * abs_pow(a1, 2.0 * m);
    MetricValue r;
    r.squared = x * x * a12 * a12 / (tt2 * den * den);
    r.norm = std::sqrt(r.squared);
    return r;
}

MetricValue kobayashi(const DomainParams& d, const PointCoords& p, const TangentVector& v) {
    require_inside(d, p);
    check_dimension(d, v.v, "vector");
    const TangentVector w(automorphism_jacobian(d, p, p) * v.v);
    const double pr = reference_coordinate(d, p);
    if (pr == 0.0) {
        MetricValue r;
        r.norm = minkowski_gauge(d, w);
        r.squared = r.norm * r.norm;
        return r;
    }
    return kobayashi_reference(d, pr, w);
}

}  // namespace egg
