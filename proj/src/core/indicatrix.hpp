#pragma once

#include <vector>

#include "domain.hpp"

namespace egg {

// Boundary of the Kobayashi indicatrix at (p1, 0) drawn in the square coordinates
// x = |vhat|^2, y = |v1|^2 (for n = 2 this is the whole indicatrix)
enum class CurveBranch { Lower, Upper };

const char* curve_branch_name(CurveBranch b);

struct KCurveSample {
    CurveBranch branch = CurveBranch::Lower;
    double alpha = 0.0;
    double x = 0.0;
    double y = 0.0;
};

struct ParamRange {
    double lo = 0.0;
    double hi = 0.0;
};

// Lower: alpha in [1, 1/(1 - p1^{2m})]. Upper: alpha in [p1, 1]; alpha = p1 is the
// y-intercept and alpha = 1 the joining point with the lower branch.
ParamRange kcurve_range(const DomainParams& d, double p1, CurveBranch b);
KCurveSample kcurve_sample(const DomainParams& d, double p1, CurveBranch b, double alpha);
// count samples including both parameter endpoints; the upper grid is clustered
// toward the endpoints where the curve bends fastest
std::vector<KCurveSample> kcurve_grid(const DomainParams& d, double p1, CurveBranch b, int count);

struct CurveDerivatives {
    double x[4];  // x, dx/da, d2x/da2, d3x/da3
    double y[4];
};
CurveDerivatives upper_curve_derivatives(const DomainParams& d, double p1, double alpha);

struct JoiningDerivatives {
    double x_join = 0.0;
    double y_join = 0.0;
    double xdot = 0.0;
    double d2_numerator = 0.0;     // x'y'' - y'x'' at alpha = 1
    double d2_match = 0.0;         // d2y/dx2 on the upper branch at the joint (lower branch: 0)
    double d3_numerator = 0.0;     // x'y''' - y'x''' at alpha = 1
    double d3_jump = 0.0;          // d3y/dx3 jump across the joint
    double closed_form_numerator = 0.0;
};
// Exact (Taylor-mode) derivatives at the joining point; m = 1/2 is unsupported
// because dx/dalpha vanishes there.
JoiningDerivatives joining_point_derivatives(const DomainParams& d, double p1);

// y as a function of x along the square-coordinate indicatrix: the lower line for
// x >= x_join (continued linearly past its end) and the upper branch for x < x_join
double indicatrix_y(const DomainParams& d, double p1, double x);
double upper_alpha_for_x(const DomainParams& d, double p1, double x);

enum class Convexity { Convex, Concave, Affine, Mixed };
const char* convexity_name(Convexity c);

struct ConvexityVerdict {
    Convexity verdict = Convexity::Mixed;
    double margin = 0.0;  // signed slack of the verdict (positive when strict)
    double max_abs_second_difference = 0.0;
    int samples = 0;
};
ConvexityVerdict square_convexity_check(const DomainParams& d, double p1, CurveBranch b, int samples);

}  // namespace egg
