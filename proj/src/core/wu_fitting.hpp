#pragma once

#include "domain.hpp"

namespace egg {

// Diagonal of the Wu tensor at a reference point (p1, 0): the ellipsoid
// r1 |v1|^2 + r2 |vhat|^2 <= 1 of least volume containing the Kobayashi indicatrix
struct WuEllipsoidDiag {
    double r1 = 0.0;
    double r2 = 0.0;
};

enum class FitCase { Chord, LowerLine, UpperContact, OriginLimit };
const char* fit_case_name(FitCase c);

struct ContactPoint {
    double x = 0.0;
    double y = 0.0;
    double alpha = 0.0;
};

// Root X in [P, 1] (P = (p1^{2m}/s^2)^{1/m}) of
//   s^4 X^{2m-1} - (m+1) s^2 p1^{2m} X^{m-1} + (m-2) s^2 p1^{2m} X^m + 2 p1^{4m} = 0.
// Requires m > 1 and p1^{2m} <= s^2 / 2.
double solve_X(const DomainParams& d, double p1, double s = 1.0);

FitCase fit_case(const DomainParams& d, double p1);
WuEllipsoidDiag fit_reference(const DomainParams& d, double p1);
WuEllipsoidDiag fit_at_origin(const DomainParams& d);

// Individual closed forms (used on both sides of the M0 seam)
WuEllipsoidDiag fit_lower_line(const DomainParams& d, double p1);
WuEllipsoidDiag fit_upper_contact(const DomainParams& d, double p1);

ContactPoint contact_point(const DomainParams& d, double p1);

// Independent numerical fit: maximise r1 r2 subject to r1 y + r2 x <= 1 over
// sampled K-curve points (convex hull + vertex/edge candidates, refined by zooming
// on the contact region)
WuEllipsoidDiag fit_oracle(const DomainParams& d, double p1, int samples = 4096);

// max over sampled K-curve points of r1 y + r2 x - 1 (positive means the
// indicatrix pokes out of the ellipsoid)
double containment_violation(const DomainParams& d, double p1, const WuEllipsoidDiag& f, int samples = 4096);

}  // namespace egg
