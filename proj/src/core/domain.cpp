#include "domain.hpp"

#include <algorithm>
#include <sstream>

#include "roots.hpp"

namespace egg {

const char* region_name(RegionLabel r) {
    switch (r) {
        case RegionLabel::Z: return "Z";
        case RegionLabel::MMinus: return "M_MINUS";
        case RegionLabel::MZero: return "M_ZERO";
        case RegionLabel::MPlus: return "M_PLUS";
        case RegionLabel::Generic: return "GENERIC";
        case RegionLabel::Outside: return "OUTSIDE";
    }
    return "UNKNOWN";
}

DomainParams::DomainParams(double m, int n) : m_(m), n_(n), m0_radius_(std::pow(0.5, 1.0 / (2.0 * m))) {}

DomainParams DomainParams::create(double m, int n) {
    if (!std::isfinite(m) || m < 0.5) {
        std::ostringstream os;
        os << "exponent m must be a finite number >= 1/2 (got " << m << ")";
        fail(ErrorKind::InvalidArgument, os.str());
    }
    if (n < 2 || n > 64) {
        std::ostringstream os;
        os << "dimension n must satisfy 2 <= n <= 64 (got " << n << ")";
        fail(ErrorKind::InvalidArgument, os.str());
    }
    return DomainParams(m, n);
}

void check_dimension(const DomainParams& d, const CVector& v, const char* what) {
    if (v.size() != d.n()) {
        std::ostringstream os;
        os << what << " has " << v.size() << " components, expected " << d.n();
        fail(ErrorKind::InvalidArgument, os.str());
    }
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag()))
            fail(ErrorKind::InvalidArgument, std::string(what) + " has a non-finite component");
}

double defining_function(const DomainParams& d, const PointCoords& p) {
    check_dimension(d, p.z, "point");
    return abs_pow_2m(d, p.z1()) + p.hat_norm2() - 1.0;
}

bool contains(const DomainParams& d, const PointCoords& p) { return defining_function(d, p) < 0.0; }

void require_inside(const DomainParams& d, const PointCoords& p) {
    const double rho = defining_function(d, p);
    if (!(rho < 0.0)) {
        std::ostringstream os;
        os << "point lies outside the domain (defining function " << rho << ")";
        fail(ErrorKind::Domain, os.str());
    }
}

double minkowski_gauge(const DomainParams& d, const TangentVector& v) {
    check_dimension(d, v.v, "vector");
    const double a = std::abs(v.v(0));
    const double b = std::sqrt(v.v.tail(d.n() - 1).squaredNorm());
    if (a == 0.0) return b;
    if (b == 0.0) return a;
    const double m2 = 2.0 * d.m();
    // phi(g) = (a/g)^{2m} + (b/g)^2 - 1 is decreasing; flip sign for the solver's convention
    auto f = [&](double g) {
        const double ta = abs_pow(a / g, m2);
        const double tb = sq(b / g);
        return std::pair<double, double>{1.0 - ta - tb, (m2 * ta + 2.0 * tb) / g};
    };
    return solve_bracketed(f, std::max(a, b), a + b).x;
}

RegionLabel classify_region(const DomainParams& d, const PointCoords& p, double tol) {
    if (!(tol >= 0.0)) fail(ErrorKind::InvalidArgument, "region tolerance must be non-negative");
    if (!(defining_function(d, p) < 0.0)) return RegionLabel::Outside;
    if (std::abs(p.z1()) <= tol) return RegionLabel::Z;
    if (!d.has_m0_seam()) return RegionLabel::Generic;
    const double g = 2.0 * abs_pow_2m(d, p.z1()) + p.hat_norm2() - 1.0;
    if (std::abs(g) <= tol) return RegionLabel::MZero;
    return g > 0.0 ? RegionLabel::MPlus : RegionLabel::MMinus;
}

double seam_distance(const DomainParams& d, const PointCoords& p) {
    double dist = std::numeric_limits<double>::infinity();
    const double a = std::abs(p.z1());
    if (d.thin_set_is_seam()) dist = a;
    if (d.has_m0_seam()) {
        const double g = 2.0 * abs_pow_2m(d, p.z1()) + p.hat_norm2() - 1.0;
        const double grad = std::sqrt(sq(4.0 * d.m() * abs_pow(a, 2.0 * d.m() - 1.0)) + 4.0 * p.hat_norm2());
        dist = std::min(dist, grad > 0.0 ? std::abs(g) / grad : std::numeric_limits<double>::infinity());
    }
    return dist;
}

double boundary_distance(const DomainParams& d, const PointCoords& p) {
    const double rho = defining_function(d, p);
    if (rho >= 0.0) return 0.0;
    const double a = std::abs(p.z1());
    const double grad = std::sqrt(sq(2.0 * d.m() * abs_pow(a, 2.0 * d.m() - 1.0)) + 4.0 * p.hat_norm2());
    if (grad <= 0.0) return 1.0;
    return std::min(1.0, -rho / grad);
}

double reference_coordinate(const DomainParams& d, const PointCoords& p) {
    const double s2 = 1.0 - p.hat_norm2();
    return std::abs(p.z1()) / abs_pow(s2, 1.0 / (2.0 * d.m()));
}

namespace {

struct AutParts {
    cplx c;
    CMatrix L;
    CVector phat;
};

AutParts automorphism_parts(const DomainParams& d, const PointCoords& p) {
    const int k = d.n() - 1;
    AutParts a;
    a.phat = p.z.tail(k);
    const double r2 = a.phat.squaredNorm();
    const double s = std::sqrt(1.0 - r2);
    const double ap1 = std::abs(p.z1());
    const cplx unimod = ap1 > 0.0 ? cplx(ap1) / p.z1() : cplx(1.0);
    a.c = unimod * abs_pow(s, 1.0 / d.m());
    if (r2 > 0.0) {
        const CMatrix P = a.phat * a.phat.adjoint() / r2;
        a.L = -(P + s * (CMatrix::Identity(k, k) - P));
    } else {
        a.L = -CMatrix::Identity(k, k);
    }
    return a;
}

}  // namespace

PointCoords egg_automorphism(const DomainParams& d, const PointCoords& p, const PointCoords& z) {
    require_inside(d, p);
    check_dimension(d, z.z, "point");
    const int k = d.n() - 1;
    const AutParts a = automorphism_parts(d, p);
    const CVector zhat = z.z.tail(k);
    const cplx w = a.phat.dot(zhat);  // sum z_j conj(p_j)
    const cplx one_w = 1.0 - w;
    CVector out(d.n());
    out(0) = a.c * std::pow(one_w, -1.0 / d.m()) * z.z1();
    out.tail(k) = (a.phat + a.L * zhat) / one_w;
    return PointCoords(out);
}

CMatrix automorphism_jacobian(const DomainParams& d, const PointCoords& p, const PointCoords& z) {
    require_inside(d, p);
    check_dimension(d, z.z, "point");
    const int n = d.n();
    const int k = n - 1;
    const AutParts a = automorphism_parts(d, p);
    const CVector zhat = z.z.tail(k);
    const cplx one_w = 1.0 - a.phat.dot(zhat);
    const CVector A = a.phat + a.L * zhat;
    CMatrix J = CMatrix::Zero(n, n);
    const cplx f = std::pow(one_w, -1.0 / d.m());
    J(0, 0) = a.c * f;
    for (int j = 0; j < k; ++j) J(0, j + 1) = a.c * z.z1() * (1.0 / d.m()) * f / one_w * std::conj(a.phat(j));
    J.bottomRightCorner(k, k) = a.L / one_w + A * a.phat.adjoint() / (one_w * one_w);
    return J;
}

PointCoords Automorphism::apply(const DomainParams& d, const PointCoords& z) const {
    PointCoords w = egg_automorphism(d, q, z);
    w.z(0) *= phase;
    const int k = d.n() - 1;
    w.z.tail(k) = (unitary * w.z.tail(k)).eval();
    return w;
}

CMatrix Automorphism::jacobian(const DomainParams& d, const PointCoords& z) const {
    CMatrix J = automorphism_jacobian(d, q, z);
    const int k = d.n() - 1;
    J.row(0) *= phase;
    J.bottomRows(k) = (unitary * J.bottomRows(k)).eval();
    return J;
}

PointCoords random_point(const DomainParams& d, Rng& rng, double max_fraction) {
    const int k = d.n() - 1;
    const double level = rng.uniform(0.0, max_fraction);
    const double t = rng.uniform();
    CVector z(d.n());
    z(0) = abs_pow(level * t, 1.0 / (2.0 * d.m())) * rng.unit_phase();
    CVector h(k);
    for (int j = 0; j < k; ++j) h(j) = cplx(rng.normal(), rng.normal());
    const double hn = h.norm();
    z.tail(k) = hn > 0.0 ? CVector(h * (std::sqrt(level * (1.0 - t)) / hn)) : CVector(CVector::Zero(k));
    return PointCoords(z);
}

TangentVector random_direction(int n, Rng& rng) {
    CVector v(n);
    for (int j = 0; j < n; ++j) v(j) = cplx(rng.normal(), rng.normal());
    return TangentVector(v / v.norm());
}

Automorphism random_automorphism(const DomainParams& d, Rng& rng, double max_radius) {
    Automorphism a;
    a.q = random_point(d, rng, max_radius);
    a.phase = rng.unit_phase();
    const int k = d.n() - 1;
    CMatrix g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
    Eigen::HouseholderQR<CMatrix> qr(g);
    a.unitary = qr.householderQ() * CMatrix::Identity(k, k);
    return a;
}

}  // namespace egg
