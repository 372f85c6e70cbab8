#pragma once

#include <string>

#include "common.hpp"

namespace egg {

enum class RegionLabel { Z, MMinus, MZero, MPlus, Generic, Outside };

const char* region_name(RegionLabel r);

// E_{2m} = { |z1|^{2m} + |zhat|^2 < 1 } in C^n
class DomainParams {
public:
    static DomainParams create(double m, int n);

    double m() const { return m_; }
    int n() const { return n_; }
    // |z1| on the reference axis where |z1|^{2m} = 1/2 (only meaningful for m > 1)
    double m0_radius() const { return m0_radius_; }
    bool thin_set_is_seam() const { return m_ != 1.0; }
    bool has_m0_seam() const { return m_ > 1.0; }

private:
    DomainParams(double m, int n);
    double m_;
    int n_;
    double m0_radius_;
};

struct PointCoords {
    CVector z;
    PointCoords() = default;
    explicit PointCoords(CVector v) : z(std::move(v)) {}
    cplx z1() const { return z(0); }
    double hat_norm2() const { return z.tail(z.size() - 1).squaredNorm(); }
};

struct TangentVector {
    CVector v;
    TangentVector() = default;
    explicit TangentVector(CVector w) : v(std::move(w)) {}
};

inline double abs_pow_2m(const DomainParams& d, cplx t) { return abs_pow(std::abs(t), 2.0 * d.m()); }

void check_dimension(const DomainParams& d, const CVector& v, const char* what);

// rho(z) = |z1|^{2m} + |zhat|^2 - 1; negative inside
double defining_function(const DomainParams& d, const PointCoords& p);
bool contains(const DomainParams& d, const PointCoords& p);
void require_inside(const DomainParams& d, const PointCoords& p);

// Minkowski functional of E at v: smallest g with v/g on the boundary
double minkowski_gauge(const DomainParams& d, const TangentVector& v);

RegionLabel classify_region(const DomainParams& d, const PointCoords& p, double tol = 1e-10);

// Approximate Euclidean distance to the non-smooth thin sets (Z, and M0 for m > 1)
double seam_distance(const DomainParams& d, const PointCoords& p);
// Approximate Euclidean distance to the boundary
double boundary_distance(const DomainParams& d, const PointCoords& p);

// |p1| / (1 - |phat|^2)^{1/(2m)}: first coordinate of Phi_p(p) up to phase
double reference_coordinate(const DomainParams& d, const PointCoords& p);

// Automorphism Phi_p of E with Phi_p(p) = (reference_coordinate(p), 0)
PointCoords egg_automorphism(const DomainParams& d, const PointCoords& p, const PointCoords& z);
// Holomorphic Jacobian d(Phi_p)_i / dz_j evaluated at z
CMatrix automorphism_jacobian(const DomainParams& d, const PointCoords& p, const PointCoords& z);

// Composite automorphism used for invariance checks:
// z -> (phase * w1, U * what) with w = Phi_q(z)
struct Automorphism {
    PointCoords q;
    cplx phase{1.0, 0.0};
    CMatrix unitary;  // (n-1) x (n-1)

    PointCoords apply(const DomainParams& d, const PointCoords& z) const;
    CMatrix jacobian(const DomainParams& d, const PointCoords& z) const;
};

Automorphism random_automorphism(const DomainParams& d, Rng& rng, double max_radius = 0.6);
PointCoords random_point(const DomainParams& d, Rng& rng, double max_fraction = 0.9);
TangentVector random_direction(int n, Rng& rng);

}  // namespace egg
