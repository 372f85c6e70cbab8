#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domain.hpp"

namespace egg {

// R_{i jbar k lbar} = -d_k d_lbar h_{i jbar} + h^{mu nubar} (d_k h_{i nubar}) (d_lbar h_{mu jbar})
struct CurvatureTensor {
    int n = 0;
    std::vector<cplx> R;
    CMatrix metric;
    double metric_kahler_defect = 0.0;  // max |d_k h_{i jbar} - d_i h_{k jbar}| from the same stencil

    cplx operator()(int i, int j, int k, int l) const { return R[((i * n + j) * n + k) * n + l]; }
    // R(v, vbar, v, vbar) / h(v, vbar)^2
    double holomorphic_sectional(const CVector& v) const;
    double kahler_symmetry_defect() const;     // max |R_{i jbar k lbar} - R_{k jbar i lbar}|
    double conjugate_symmetry_defect() const;  // max |R_{i jbar k lbar} - conj(R_{j ibar l kbar})|
};

CurvatureTensor curvature_tensor(const DomainParams& d, const PointCoords& z, double step = 1e-4);
double holomorphic_curvature(const DomainParams& d, const PointCoords& z, const CVector& v, double step = 1e-4);

// 2n^2 + 16 unit directions: coordinate axes, pairwise combinations e_i + c e_j
// (c = 1, -1, i, -i) and n + 16 seeded random directions
std::vector<CVector> sample_directions(int n, std::uint64_t seed);

struct GridSpec {
    double z1_min = 0.05;
    double z1_max = 0.9;
    int z1_count = 6;
    double zhat_min = 0.0;  // fractions of the admissible |zhat| at the given |z1|
    double zhat_max = 0.8;
    int zhat_count = 4;
    double step = 1e-4;
};

struct CurvatureRecord {
    PointCoords point;
    RegionLabel region = RegionLabel::Generic;
    bool skipped = false;
    std::string skip_reason;
    double step = 0.0;
    double min_sec = 0.0;
    double max_sec = 0.0;
    double kahler_defect = 0.0;
    double symmetry_defect = 0.0;
    double conjugate_defect = 0.0;
    double r11_22_minus_r21_12 = 0.0;  // R_{1 1bar 2 2bar} - R_{2 1bar 1 2bar}
};

std::vector<CurvatureRecord> curvature_scan(const DomainParams& d, const GridSpec& g, std::uint64_t seed,
                                            int threads = 0);

}  // namespace egg
