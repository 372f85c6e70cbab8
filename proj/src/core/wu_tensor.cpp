#include "wu_tensor.hpp"

#include <sstream>

#include <Eigen/Eigenvalues>

#include "derivatives.hpp"
#include "wu_fitting.hpp"

namespace egg {

double HermitianForm::norm2(const CVector& v) const { return (v.transpose() * h * v.conjugate())(0, 0).real(); }

double HermitianForm::min_eig() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double HermitianForm::max_eig() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

double HermitianForm::hermitian_defect() const { return (h - h.adjoint()).cwiseAbs().maxCoeff(); }

const char* tensor_formula_name(TensorFormula f) {
    switch (f) {
        case TensorFormula::Chord: return "CHORD";
        case TensorFormula::KahlerPotential: return "KAHLER_POTENTIAL";
        case TensorFormula::ContactEquation: return "CONTACT_EQUATION";
        case TensorFormula::OriginLimit: return "ORIGIN_LIMIT";
    }
    return "UNKNOWN";
}

namespace {

CMatrix chord_tensor(const DomainParams& d, const CVector& z) {
    const int n = d.n();
    const double m = d.m();
    const double S = 1.0 - z.tail(n - 1).squaredNorm();
    const double a2 = std::norm(z(0));
    const double Sm = abs_pow(S, 1.0 / m);
    const double D = Sm - a2;
    const double E = S - abs_pow(std::abs(z(0)), 2.0 * m);
    const double D2 = D * D;
    CMatrix H(n, n);
    H(0, 0) = Sm / D2;
    const double c0 = Sm / S / (m * D2);
    const double cc = Sm / (S * S) * a2 / (m * m * D2);
    for (int j = 1; j < n; ++j) {
        H(0, j) = c0 * std::conj(z(0)) * z(j);
        H(j, 0) = std::conj(H(0, j));
        for (int k = 1; k < n; ++k) {
            const cplx zz = std::conj(z(j)) * z(k);
            H(j, k) = cc * zz + (zz + (j == k ? S : 0.0)) / (S * E);
        }
    }
    return H;
}

CMatrix potential_tensor(const DomainParams& d, const CVector& z) {
    const int n = d.n();
    const double m = d.m();
    const double s2 = 1.0 - z.tail(n - 1).squaredNorm();
    const double a = std::abs(z(0));
    const double D = s2 - abs_pow(a, 2.0 * m);
    const double D2 = D * D;
    const double a2m2 = abs_pow(a, 2.0 * m - 2.0);
    CMatrix H(n, n);
    H(0, 0) = m * m * s2 * a2m2 / D2;
    for (int j = 1; j < n; ++j) {
        H(j, 0) = m * a2m2 * z(0) * std::conj(z(j)) / D2;
        H(0, j) = std::conj(H(j, 0));
        for (int k = 1; k < n; ++k) H(j, k) = (std::conj(z(j)) * z(k) + (j == k ? D : 0.0)) / D2;
    }
    return H;
}

CMatrix contact_tensor(const DomainParams& d, const CVector& z) {
    const int n = d.n();
    const double m = d.m();
    const double s2 = 1.0 - z.tail(n - 1).squaredNorm();
    const double a = std::abs(z(0));
    const double q = abs_pow(a, 2.0 * m);
    const double X = solve_X(d, a, std::sqrt(s2));
    const double c = m * abs_pow(X, m - 1.0) - (m - 1.0) * abs_pow(X, m);
    const double F = s2 * c - q;
    const double pref = s2 * abs_pow(X, 2.0 * m - 1.0) / (2.0 * F * F);
    CMatrix H(n, n);
    H(0, 0) = pref * m * m * s2 / (a * a);
    for (int j = 1; j < n; ++j) {
        H(j, 0) = pref * m * std::conj(z(j)) / std::conj(z(0));
        H(0, j) = std::conj(H(j, 0));
        for (int k = 1; k < n; ++k)
            H(j, k) = pref * (c / q * std::conj(z(j)) * z(k) + (j == k ? c * s2 / q - 1.0 : 0.0));
    }
    return H;
}

// lower triangle from the upper one, real diagonal
CMatrix hermitize(CMatrix h) {
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        h(i, i) = h(i, i).real();
        for (Eigen::Index j = i + 1; j < h.cols(); ++j) h(j, i) = std::conj(h(i, j));
    }
    return h;
}

}  // namespace

HermitianForm pullback_tensor(const DomainParams& d, const PointCoords& z) {
    require_inside(d, z);
    const double pr = reference_coordinate(d, z);
    const WuEllipsoidDiag f = pr > 0.0 ? fit_reference(d, pr) : fit_at_origin(d);
    const CMatrix J = automorphism_jacobian(d, z, z);
    CVector diag = CVector::Constant(d.n(), cplx(f.r2));
    diag(0) = f.r1;
    HermitianForm out;
    out.h = hermitize(J.transpose() * diag.asDiagonal() * J.conjugate());
    return out;
}

WuTensorResult wu_tensor(const DomainParams& d, const PointCoords& z, double tol) {
    require_inside(d, z);
    WuTensorResult r;
    r.region = classify_region(d, z, tol);
    r.side = r.region;
    if (d.m() <= 1.0) {
        r.formula = TensorFormula::Chord;
        r.form.h = hermitize(chord_tensor(d, z.z));
        return r;
    }
    switch (r.region) {
        case RegionLabel::Z:
            r.formula = TensorFormula::OriginLimit;
            r.limit = true;
            r.form = pullback_tensor(d, PointCoords([&] {
                                         CVector w = z.z;
                                         w(0) = 0.0;
                                         return w;
                                     }()));
            break;
        case RegionLabel::MZero:
            r.side = RegionLabel::MPlus;
            [[fallthrough]];
        case RegionLabel::MPlus:
            r.formula = TensorFormula::KahlerPotential;
            r.form.h = potential_tensor(d, z.z);
            break;
        case RegionLabel::MMinus:
            r.formula = TensorFormula::ContactEquation;
            r.form.h = contact_tensor(d, z.z);
            break;
        default:
            fail(ErrorKind::Domain, "point lies outside the domain");
    }
    r.form.h = hermitize(r.form.h);
    return r;
}

CMatrix wu_matrix(const DomainParams& d, const PointCoords& z) { return wu_tensor(d, z).form.h; }

double wu_norm(const DomainParams& d, const PointCoords& z, const CVector& v) {
    check_dimension(d, v, "vector");
    return std::sqrt(std::max(0.0, wu_tensor(d, z).form.norm2(v)));
}

double safe_step(const DomainParams& d, const PointCoords& z, double step, int stencil_reach) {
    if (!(step > 0.0)) fail(ErrorKind::InvalidArgument, "differencing step must be positive");
    const double sd = seam_distance(d, z);
    const double bd = boundary_distance(d, z);
    const double h = std::min({step, sd / stencil_reach, bd / stencil_reach});
    if (h < 1e-9) {
        std::ostringstream os;
        os << "point is too close to a seam or the boundary for differencing (seam distance " << sd
           << ", boundary distance " << bd << ")";
        fail(ErrorKind::SeamProximity, os.str());
    }
    return h;
}

double kahler_defect(const DomainParams& d, const PointCoords& z, double step) {
    require_inside(d, z);
    const double h = safe_step(d, z, step);
    const TensorField f = [&](const CVector& w) { return wu_matrix(d, PointCoords(w)); };
    const FirstDerivatives g = first_derivatives(f, z.z, h);
    const int n = d.n();
    double defect = 0.0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) defect = std::max(defect, std::abs(g.d[k](i, j) - g.d[i](k, j)));
    return defect;
}

}  // namespace egg
