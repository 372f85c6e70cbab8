#pragma once

#include <cmath>
#include <algorithm>
#include <sstream>
#include <tuple>
#include <utility>

#include "common.hpp"

namespace egg {

struct RootOptions {
    int max_iter = 200;
    double residual_tol = 1e-14;  // accepted |f| when the bracket cannot shrink further
};

struct RootResult {
    double x = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// Safeguarded Newton on a sign-changing bracket. f(x) returns {value, derivative}.
// Terminates on bracket width near machine precision rather than on |f| so that
// badly scaled equations still resolve to full relative accuracy.
template <class F>
RootResult solve_bracketed(F&& f, double lo, double hi, const RootOptions& opt = {}) {
    auto [flo, dlo] = f(lo);
    auto [fhi, dhi] = f(hi);
    (void)dlo;
    (void)dhi;
    if (flo == 0.0) return {lo, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0};
    if ((flo > 0.0) == (fhi > 0.0)) {
        std::ostringstream os;
        os << "root bracket [" << lo << ", " << hi << "] has no sign change (f = " << flo << ", " << fhi << ")";
        fail(ErrorKind::Numerical, os.str());
    }
    double xl = flo < 0.0 ? lo : hi;  // f(xl) < 0
    double xh = flo < 0.0 ? hi : lo;  // f(xh) > 0
    double x = 0.5 * (lo + hi);
    double dxold = std::abs(hi - lo);
    double dx = dxold;
    auto [fx, dfx] = f(x);
    if (fx < 0.0) xl = x; else xh = x;
    for (int it = 1; it <= opt.max_iter; ++it) {
        if (fx == 0.0) return {x, 0.0, it};
        const bool newton_ok = dfx != 0.0 && ((x - xh) * dfx - fx) * ((x - xl) * dfx - fx) < 0.0 &&
                               std::abs(2.0 * fx) <= std::abs(dxold * dfx);
        double xnew;
        bool tiny_step = false;
        if (newton_ok) {
            dxold = dx;
            dx = fx / dfx;
            xnew = x - dx;
            tiny_step = std::abs(dx) <= 2.0 * kEps * std::abs(x);
        } else {
            dxold = dx;
            dx = 0.5 * (xh - xl);
            xnew = xl + dx;
        }
        x = xnew;
        std::tie(fx, dfx) = f(x);
        if (fx < 0.0) xl = x; else xh = x;
        const double width = std::abs(xh - xl);
        if (tiny_step || width <= 4.0 * kEps * std::max(std::abs(xl), std::abs(xh)) || fx == 0.0)
            return {x, std::abs(fx), it};
    }
    if (std::abs(fx) <= opt.residual_tol) return {x, std::abs(fx), opt.max_iter};
    std::ostringstream os;
    os << "root solve did not converge in " << opt.max_iter << " iterations; last bracket [" << std::min(xl, xh)
       << ", " << std::max(xl, xh) << "], residual " << fx;
    fail(ErrorKind::Numerical, os.str());
}

}  // namespace egg
