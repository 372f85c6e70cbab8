#include "derivatives.hpp"

namespace egg {

namespace {

// real coordinate a: 2k -> Re z_k, 2k+1 -> Im z_k
CVector shifted(const CVector& z, int a, double h) {
    CVector w = z;
    w(a / 2) += (a % 2 == 0) ? cplx(h, 0.0) : cplx(0.0, h);
    return w;
}

CVector shifted2(const CVector& z, int a, double ha, int b, double hb) { return shifted(shifted(z, a, ha), b, hb); }

std::vector<CMatrix> real_gradient(const TensorField& f, const CVector& z, double h) {
    const int nr = 2 * static_cast<int>(z.size());
    std::vector<CMatrix> g(nr);
    for (int a = 0; a < nr; ++a) {
        const CMatrix d1 = (f(shifted(z, a, h)) - f(shifted(z, a, -h))) / (2.0 * h);
        const CMatrix d2 = (f(shifted(z, a, 0.5 * h)) - f(shifted(z, a, -0.5 * h))) / h;
        g[a] = (4.0 * d2 - d1) / 3.0;
    }
    return g;
}

void wirtinger_first(const std::vector<CMatrix>& g, int n, std::vector<CMatrix>& d, std::vector<CMatrix>& dbar) {
    const cplx I(0.0, 1.0);
    d.resize(n);
    dbar.resize(n);
    for (int k = 0; k < n; ++k) {
        d[k] = 0.5 * (g[2 * k] - I * g[2 * k + 1]);
        dbar[k] = 0.5 * (g[2 * k] + I * g[2 * k + 1]);
    }
}

}  // namespace

FirstDerivatives first_derivatives(const TensorField& f, const CVector& z, double h) {
    FirstDerivatives r;
    wirtinger_first(real_gradient(f, z, h), static_cast<int>(z.size()), r.d, r.dbar);
    return r;
}

SecondDerivatives second_derivatives(const TensorField& f, const CVector& z, double h) {
    const int n = static_cast<int>(z.size());
    const int nr = 2 * n;
    SecondDerivatives r;
    r.value = f(z);
    std::vector<CMatrix> grad(nr);
    std::vector<CMatrix> hess(nr * nr);
    auto level = [&](double s, std::vector<CMatrix>& gl, std::vector<CMatrix>& hl) {
        gl.assign(nr, CMatrix());
        hl.assign(nr * nr, CMatrix());
        std::vector<CMatrix> plus(nr), minus(nr);
        for (int a = 0; a < nr; ++a) {
            plus[a] = f(shifted(z, a, s));
            minus[a] = f(shifted(z, a, -s));
            gl[a] = (plus[a] - minus[a]) / (2.0 * s);
            hl[a * nr + a] = (plus[a] - 2.0 * r.value + minus[a]) / (s * s);
        }
        for (int a = 0; a < nr; ++a)
            for (int b = a + 1; b < nr; ++b) {
                const CMatrix v = (f(shifted2(z, a, s, b, s)) - f(shifted2(z, a, s, b, -s)) -
                                   f(shifted2(z, a, -s, b, s)) + f(shifted2(z, a, -s, b, -s))) /
                                  (4.0 * s * s);
                hl[a * nr + b] = v;
                hl[b * nr + a] = v;
            }
    };
    std::vector<CMatrix> g1, h1, g2, h2;
    level(h, g1, h1);
    level(0.5 * h, g2, h2);
    for (int a = 0; a < nr; ++a) grad[a] = (4.0 * g2[a] - g1[a]) / 3.0;
    for (int i = 0; i < nr * nr; ++i) hess[i] = (4.0 * h2[i] - h1[i]) / 3.0;
    wirtinger_first(grad, n, r.d, r.dbar);
    const cplx I(0.0, 1.0);
    r.ddbar.resize(n * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const int xk = 2 * k, yk = 2 * k + 1, xl = 2 * l, yl = 2 * l + 1;
            r.ddbar[k * n + l] = 0.25 * (hess[xk * nr + xl] + hess[yk * nr + yl] +
                                         I * (hess[xk * nr + yl] - hess[yk * nr + xl]));
        }
    return r;
}

}  // namespace egg
