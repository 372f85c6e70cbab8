#include "curvature.hpp"

#include <sstream>

#include "derivatives.hpp"
#include "parallel.hpp"
#include "wu_tensor.hpp"

namespace egg {

double CurvatureTensor::holomorphic_sectional(const CVector& v) const {
    cplx num = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cplx vij = v(i) * std::conj(v(j));
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) num += (*this)(i, j, k, l) * vij * v(k) * std::conj(v(l));
        }
    const double h = (v.transpose() * metric * v.conjugate())(0, 0).real();
    return num.real() / (h * h);
}

double CurvatureTensor::kahler_symmetry_defect() const {
    double d = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) d = std::max(d, std::abs((*this)(i, j, k, l) - (*this)(k, j, i, l)));
    return d;
}

double CurvatureTensor::conjugate_symmetry_defect() const {
    double d = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    d = std::max(d, std::abs((*this)(i, j, k, l) - std::conj((*this)(j, i, l, k))));
    return d;
}

namespace {

double curvature_step(const DomainParams& d, const PointCoords& z, double step) {
    if (!(step > 0.0)) fail(ErrorKind::InvalidArgument, "differencing step must be positive");
    const double sd = seam_distance(d, z);
    if (sd < 8.0 * step) {
        std::ostringstream os;
        os << "point is within " << sd << " of a seam (needs " << 8.0 * step << ")";
        fail(ErrorKind::SeamProximity, os.str());
    }
    const double h = std::min(step, boundary_distance(d, z) / 8.0);
    if (h < 1e-6) fail(ErrorKind::SeamProximity, "point is too close to the boundary for differencing");
    return h;
}

}  // namespace

CurvatureTensor curvature_tensor(const DomainParams& d, const PointCoords& z, double step) {
    require_inside(d, z);
    const double h = curvature_step(d, z, step);
    const TensorField f = [&](const CVector& w) { return wu_matrix(d, PointCoords(w)); };
    const SecondDerivatives s = second_derivatives(f, z.z, h);
    const int n = d.n();
    CurvatureTensor t;
    t.n = n;
    t.metric = s.value;
    t.R.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
    const CMatrix G = s.value.transpose().inverse();  // G(mu, nu) = h^{mu nubar}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    cplx acc = -s.ddbar[k * n + l](i, j);
                    for (int mu = 0; mu < n; ++mu)
                        for (int nu = 0; nu < n; ++nu) acc += G(mu, nu) * s.d[k](i, nu) * s.dbar[l](mu, j);
                    t.R[((i * n + j) * n + k) * n + l] = acc;
                }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                t.metric_kahler_defect = std::max(t.metric_kahler_defect, std::abs(s.d[k](i, j) - s.d[i](k, j)));
    return t;
}

double holomorphic_curvature(const DomainParams& d, const PointCoords& z, const CVector& v, double step) {
    check_dimension(d, v, "vector");
    if (v.norm() == 0.0) fail(ErrorKind::InvalidArgument, "direction must be non-zero");
    return curvature_tensor(d, z, step).holomorphic_sectional(v);
}

std::vector<CVector> sample_directions(int n, std::uint64_t seed) {
    std::vector<CVector> out;
    const cplx coeffs[4] = {1.0, -1.0, cplx(0.0, 1.0), cplx(0.0, -1.0)};
    for (int i = 0; i < n; ++i) out.push_back(CVector::Unit(n, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const cplx& c : coeffs) {
                CVector v = CVector::Zero(n);
                v(i) = 1.0;
                v(j) = c;
                out.push_back(v / v.norm());
            }
    Rng rng(seed);
    for (int r = 0; r < n + 16; ++r) out.push_back(random_direction(n, rng).v);
    return out;
}

std::vector<CurvatureRecord> curvature_scan(const DomainParams& d, const GridSpec& g, std::uint64_t seed,
                                            int threads) {
    if (g.z1_count < 1 || g.zhat_count < 1) fail(ErrorKind::InvalidArgument, "grid counts must be positive");
    if (!(g.z1_min >= 0.0 && g.z1_max < 1.0 && g.z1_min <= g.z1_max))
        fail(ErrorKind::InvalidArgument, "grid |z1| range must satisfy 0 <= min <= max < 1");
    if (!(g.zhat_min >= 0.0 && g.zhat_max < 1.0 && g.zhat_min <= g.zhat_max))
        fail(ErrorKind::InvalidArgument, "grid |zhat| fractions must satisfy 0 <= min <= max < 1");
    const int n = d.n();
    Rng rng(seed);
    std::vector<CurvatureRecord> recs;
    for (int a = 0; a < g.z1_count; ++a) {
        const double r1 = g.z1_count == 1 ? g.z1_min : g.z1_min + (g.z1_max - g.z1_min) * a / (g.z1_count - 1.0);
        for (int b = 0; b < g.zhat_count; ++b) {
            const double fr =
                g.zhat_count == 1 ? g.zhat_min : g.zhat_min + (g.zhat_max - g.zhat_min) * b / (g.zhat_count - 1.0);
            CVector z(n);
            z(0) = r1 * rng.unit_phase();
            const CVector dir = random_direction(n - 1, rng).v;
            z.tail(n - 1) = dir * (fr * std::sqrt(1.0 - abs_pow(r1, 2.0 * d.m())));
            CurvatureRecord rec;
            rec.point = PointCoords(z);
            recs.push_back(rec);
        }
    }
    const std::vector<CVector> dirs = sample_directions(n, seed ^ 0x9e3779b97f4a7c15ULL);
    parallel_for(recs.size(), worker_count(threads), [&](std::size_t i) {
        CurvatureRecord& rec = recs[i];
        rec.region = classify_region(d, rec.point);
        try {
            rec.step = curvature_step(d, rec.point, g.step);
            const CurvatureTensor t = curvature_tensor(d, rec.point, g.step);
            rec.min_sec = std::numeric_limits<double>::infinity();
            rec.max_sec = -rec.min_sec;
            for (const CVector& v : dirs) {
                const double k = t.holomorphic_sectional(v);
                rec.min_sec = std::min(rec.min_sec, k);
                rec.max_sec = std::max(rec.max_sec, k);
            }
            rec.kahler_defect = t.metric_kahler_defect;
            rec.symmetry_defect = t.kahler_symmetry_defect();
            rec.conjugate_defect = t.conjugate_symmetry_defect();
            rec.r11_22_minus_r21_12 = (t(0, 0, 1, 1) - t(1, 0, 0, 1)).real();
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SeamProximity && e.kind() != ErrorKind::Domain) throw;
            rec.skipped = true;
            rec.skip_reason = e.what();
        }
    });
    return recs;
}

}  // namespace egg
