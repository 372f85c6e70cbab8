#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domain.hpp"
#include "smoothness.hpp"

namespace egg {

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
};

// Holomorphic sectional curvature equals -2 on M+ (m > 1) or everywhere (m = 1).
// measured: max |H + 2| over points x directions
CheckResult check_constant_curvature(const DomainParams& d, std::uint64_t seed, int points = 10, int directions = 20,
                                     double tol = 1e-3);

// Closed-form fit against the numerical oracle at (p1, 0); measured: max relative
// error of (r1, r2). The containment violation is checked in the same pass.
CheckResult check_fit_oracle(const DomainParams& d, double p1, int samples = 4096, double tol = 1e-5,
                             double containment_tol = 1e-9);

// M- and M+ closed forms coincide at |p1|^{2m} = 1/2 (m > 1)
CheckResult check_m0_continuity(const DomainParams& d, double tol = 1e-8);

// Reference fits converge to the value at the origin as p1 -> 0
CheckResult check_origin_continuity(const DomainParams& d, double tol = 1e-6);

// Kobayashi and Wu values under random automorphisms, and tensor functoriality
CheckResult check_invariance(const DomainParams& d, std::uint64_t seed, int triples = 100, double value_tol = 1e-8,
                             double tensor_tol = 1e-7);

// wu_norm <= kobayashi + tol; measured: max (wu - kobayashi)
CheckResult check_domination(const DomainParams& d, std::uint64_t seed, int samples = 1000, double tol = 1e-9);

// Branch regularity at u = p1: values, one-sided first differences, and the
// indicatrix second/third derivative behaviour at the joining point
CheckResult check_junction(const DomainParams& d, double p1 = 0.3);

// kahler_defect at z compared with a threshold; expect_kahler selects the direction
CheckResult check_kahler_point(const DomainParams& d, const PointCoords& z, bool expect_kahler, double threshold);

// kahler_defect below tol on seeded M+ points (m > 1) or anywhere (m = 1)
CheckResult check_kahler_plus(const DomainParams& d, std::uint64_t seed, int points = 10, double tol = 1e-6);

// Synthetic |t|^a calibration of the Holder probe
CheckResult check_smoothness_calibration(double tol = 0.05);

// Regularity verdict across a seam compared with the expected class for d.m()
CheckResult check_seam_regularity(const DomainParams& d, Seam seam, std::uint64_t seed, int threads = 0);

// Every off-seam point of the default curvature scan has strictly negative
// sectional curvature, bounded above by bound
CheckResult check_curvature_negative(const DomainParams& d, std::uint64_t seed, double bound = -0.1,
                                     int threads = 0);

// Every check that applies to the configured (m, n)
std::vector<CheckResult> run_verification(const DomainParams& d, std::uint64_t seed, int threads = 0);

}  // namespace egg
