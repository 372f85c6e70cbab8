#pragma once

#include <array>
#include <cmath>

namespace egg {

// Truncated Taylor series f(a0 + e) = sum c[k] e^k, k <= N. Arithmetic on jets
// propagates exact derivatives through the closed-form curve expressions.
template <int N>
struct Jet {
    std::array<double, N + 1> c{};

    static Jet variable(double a0) {
        Jet j;
        j.c[0] = a0;
        if (N >= 1) j.c[1] = 1.0;
        return j;
    }
    static Jet constant(double v) {
        Jet j;
        j.c[0] = v;
        return j;
    }
    // k-th derivative at the expansion point
    double derivative(int k) const {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return c[k] * f;
    }
};

template <int N>
Jet<N> operator+(Jet<N> a, const Jet<N>& b) {
    for (int k = 0; k <= N; ++k) a.c[k] += b.c[k];
    return a;
}
template <int N>
Jet<N> operator-(Jet<N> a, const Jet<N>& b) {
    for (int k = 0; k <= N; ++k) a.c[k] -= b.c[k];
    return a;
}
template <int N>
Jet<N> operator-(Jet<N> a) {
    for (auto& x : a.c) x = -x;
    return a;
}
template <int N>
Jet<N> operator*(Jet<N> a, double s) {
    for (auto& x : a.c) x *= s;
    return a;
}
template <int N>
Jet<N> operator*(double s, Jet<N> a) {
    return a * s;
}
template <int N>
Jet<N> operator+(Jet<N> a, double s) {
    a.c[0] += s;
    return a;
}
template <int N>
Jet<N> operator+(double s, Jet<N> a) {
    return a + s;
}
template <int N>
Jet<N> operator-(double s, const Jet<N>& a) {
    return -a + s;
}
template <int N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
    Jet<N> r;
    for (int k = 0; k <= N; ++k)
        for (int j = 0; j <= k; ++j) r.c[k] += a.c[j] * b.c[k - j];
    return r;
}
template <int N>
Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) {
    Jet<N> r;
    for (int k = 0; k <= N; ++k) {
        double s = a.c[k];
        for (int j = 1; j <= k; ++j) s -= b.c[j] * r.c[k - j];
        r.c[k] = s / b.c[0];
    }
    return r;
}
template <int N>
Jet<N> exp(const Jet<N>& a) {
    Jet<N> r;
    r.c[0] = std::exp(a.c[0]);
    for (int k = 1; k <= N; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += j * a.c[j] * r.c[k - j];
        r.c[k] = s / k;
    }
    return r;
}
template <int N>
Jet<N> log(const Jet<N>& a) {
    Jet<N> r;
    r.c[0] = std::log(a.c[0]);
    for (int k = 1; k <= N; ++k) {
        double s = a.c[k];
        for (int j = 1; j < k; ++j) s -= (static_cast<double>(j) / k) * r.c[j] * a.c[k - j];
        r.c[k] = s / a.c[0];
    }
    return r;
}
// a^e for a positive expansion point
template <int N>
Jet<N> power(const Jet<N>& a, double e) {
    return exp(log(a) * e);
}

inline double power(double a, double e) { return std::exp(e * std::log(a)); }

}  // namespace egg
