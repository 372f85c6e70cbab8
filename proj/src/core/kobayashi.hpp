#pragma once

#include "domain.hpp"

namespace egg {

enum class Branch { Lower, Upper, Axis };

const char* branch_name(Branch b);

struct MetricValue {
    double norm = 0.0;
    double squared = 0.0;
};

// Quantities defining the extremal-disc branch at the reference point (p1, 0)
struct BranchParams {
    Branch branch = Branch::Lower;
    double u = 0.0;    // m |v1| / |vhat|
    double t = 0.0;
    double tau = 0.0;  // 1 - t, computed without cancellation
    double alpha = 0.0;
    double one_minus_alpha2 = 0.0;
};

// Root of a^{2m} - t a^{2m-2} - (1-t) p1^{2m} = 0 on [sqrt(t), 1]
double solve_alpha(double m, double t, double p1);

BranchParams branch_params(const DomainParams& d, double p1, const TangentVector& v);

// Kobayashi-Royden metric at (p1, 0, ..., 0), 0 < p1 < 1
MetricValue kobayashi_reference(const DomainParams& d, double p1, const TangentVector& v);

// Individual branch formulas, exposed for the junction checks. The upper formula
// accepts any u >= p1 (it reduces to its limit at u = p1).
MetricValue kobayashi_lower_formula(const DomainParams& d, double p1, const TangentVector& v);
MetricValue kobayashi_upper_formula(const DomainParams& d, double p1, const TangentVector& v);

// Alternate closed form of the upper branch written in terms of |v1|, |vhat|
MetricValue kobayashi_alt_upper(const DomainParams& d, double p1, const TangentVector& v);

// Kobayashi-Royden metric at an arbitrary interior point
MetricValue kobayashi(const DomainParams& d, const PointCoords& p, const TangentVector& v);

}  // namespace egg
