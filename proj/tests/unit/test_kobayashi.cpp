#include <doctest.h>

#include <cmath>

#include "core/kobayashi.hpp"
#include "oracles.hpp"

using namespace egg;

namespace {

TangentVector tv(cplx a, cplx b) {
    CVector v(2);
    v << a, b;
    return TangentVector(v);
}

}  // namespace

TEST_SUITE("kobayashi") {

TEST_CASE("alpha equation") {
    CHECK(solve_alpha(2.0, 1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(solve_alpha(2.0, 1e-14, 0.5) == doctest::Approx(0.5).epsilon(1e-10));
    // m = 2, t = 0.5: alpha^4 - 0.5 alpha^2 - 0.5 * 0.5^4 = 0
    const double a = oracle::bisect([](double x) { return std::pow(x, 4) - 0.5 * x * x - 0.5 * std::pow(0.5, 4); },
                                    std::sqrt(0.5), 1.0);
    CHECK(solve_alpha(2.0, 0.5, 0.5) == doctest::Approx(a).epsilon(1e-14));
    // quadratic in alpha^2
    CHECK(a * a == doctest::Approx(0.25 + std::sqrt(0.375) / 2).epsilon(1e-13));
}

TEST_CASE("closed-form branches at the reference point") {
    const DomainParams d = DomainParams::create(2.0, 2);
    CHECK(kobayashi_reference(d, 0.5, tv(0.0, 1.0)).norm == doctest::Approx(1.0 / std::sqrt(1 - std::pow(0.5, 4))).epsilon(1e-15));
    CHECK(kobayashi_reference(d, 0.5, tv(cplx(0.0, 0.7), 0.0)).norm == doctest::Approx(0.7 / 0.75).epsilon(1e-15));
    CHECK(branch_params(d, 0.5, tv(1.0, 0.0)).branch == Branch::Axis);
    CHECK(branch_params(d, 0.5, tv(0.0, 1.0)).branch == Branch::Lower);
    CHECK(branch_params(d, 0.3, tv(1.0, 0.1)).branch == Branch::Upper);
    // vhat -> 0 approaches the axis value
    const double axis = 1.0 / (1 - 0.09);
    CHECK(kobayashi_reference(d, 0.3, tv(1.0, 1e-9)).norm == doctest::Approx(axis).epsilon(1e-8));
}

TEST_CASE("upper K-curve points have unit norm") {
    for (double m : {0.5, 0.75, 1.25, 2.0, 3.0}) {
        const DomainParams d = DomainParams::create(m, 2);
        for (double p : {0.1, 0.3, 0.6, 0.9}) {
            for (int k = 1; k < 40; ++k) {
                const double alpha = p + (1 - p) * k / 40.0;
                const oracle::XY s = oracle::upper_curve(m, p, alpha);
                if (s.x <= 0 || s.y <= 0) continue;
                const MetricValue v = kobayashi_reference(d, p, tv(std::sqrt(s.y), std::sqrt(s.x)));
                CHECK(v.norm == doctest::Approx(1.0).epsilon(1e-11));
            }
            for (int k = 0; k < 10; ++k) {
                const double q = std::pow(p, 2 * m);
                const double alpha = 1.0 + (1.0 / (1.0 - q) - 1.0) * k / 10.0;
                const oracle::XY s = oracle::lower_curve(m, p, alpha);
                CHECK(kobayashi_reference(d, p, tv(std::sqrt(s.y), std::sqrt(s.x))).norm ==
                      doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("alternate upper form agrees") {
    const DomainParams d = DomainParams::create(2.0, 2);
    const TangentVector v = tv(1.0, 0.1);
    CHECK(kobayashi_alt_upper(d, 0.3, v).norm == doctest::Approx(kobayashi_reference(d, 0.3, v).norm).epsilon(1e-12));
    for (double m : {0.75, 1.25, 3.0}) {
        const DomainParams e = DomainParams::create(m, 2);
        Rng rng(4);
        for (int k = 0; k < 200; ++k) {
            const double p = rng.uniform(0.02, 0.98);
            const TangentVector w = tv(cplx(rng.normal(), rng.normal()), cplx(rng.normal(), rng.normal()));
            if (branch_params(e, p, w).branch != Branch::Upper) continue;
            CHECK(kobayashi_alt_upper(e, p, w).norm == doctest::Approx(kobayashi_reference(e, p, w).norm).epsilon(1e-11));
        }
    }
}

TEST_CASE("ball reduces to the Poincare-type metric") {
    const DomainParams d = DomainParams::create(1.0, 3);
    Rng rng(21);
    for (int k = 0; k < 100; ++k) {
        const PointCoords p = random_point(d, rng, 0.95);
        const TangentVector v = random_direction(3, rng);
        CHECK(kobayashi(d, p, v).norm == doctest::Approx(oracle::ball_kobayashi(p.z, v.v)).epsilon(1e-12));
    }
}

TEST_CASE("general points") {
    for (double m : {0.5, 0.75, 2.0}) {
        const DomainParams d = DomainParams::create(m, 3);
        Rng rng(31);
        // origin: gauge of the domain
        CVector zero = CVector::Zero(3);
        for (int k = 0; k < 10; ++k) {
            const TangentVector v = random_direction(3, rng);
            CHECK(kobayashi(d, PointCoords(zero), v).norm == doctest::Approx(oracle::gauge(m, v.v)).epsilon(1e-10));
        }
        // reference axis: same as the reference formula, any phase of p1
        CVector p(3);
        p << std::polar(0.4, 1.1), 0.0, 0.0;
        const TangentVector v = random_direction(3, rng);
        CVector vr = v.v;
        vr(0) *= std::polar(1.0, -1.1);
        CVector vr2(2);
        vr2 << vr(0), vr.tail(2).norm();
        CHECK(kobayashi(d, PointCoords(p), v).norm ==
              doctest::Approx(kobayashi_reference(DomainParams::create(m, 2), 0.4, TangentVector(vr2)).norm).epsilon(1e-12));
        // homogeneity
        const PointCoords z = random_point(d, rng);
        const cplx lam(0.3, -1.7);
        CHECK(kobayashi(d, z, TangentVector(lam * v.v)).norm == doctest::Approx(std::abs(lam) * kobayashi(d, z, v).norm).epsilon(1e-12));
        CHECK(kobayashi(d, z, TangentVector(CVector::Zero(3))).norm == 0.0);
    }
}

TEST_CASE("invariance under automorphisms") {
    for (double m : {0.75, 2.0}) {
        const DomainParams d = DomainParams::create(m, 3);
        Rng rng(12);
        for (int k = 0; k < 50; ++k) {
            const PointCoords p = random_point(d, rng);
            const TangentVector v = random_direction(3, rng);
            const Automorphism a = random_automorphism(d, rng);
            const double lhs = kobayashi(d, a.apply(d, p), TangentVector(a.jacobian(d, p) * v.v)).norm;
            CHECK(lhs == doctest::Approx(kobayashi(d, p, v).norm).epsilon(1e-9));
        }
    }
}

TEST_CASE("branches meet at u = p1") {
    for (double m : {0.5, 0.75, 2.0, 3.0}) {
        const DomainParams d = DomainParams::create(m, 2);
        for (double p : {0.2, 0.5, 0.8}) {
            const TangentVector v = tv(p / m, 1.0);
            CHECK(kobayashi_upper_formula(d, p, v).norm ==
                  doctest::Approx(kobayashi_lower_formula(d, p, v).norm).epsilon(1e-12));
        }
    }
}

TEST_CASE("outside points are rejected") {
    const DomainParams d = DomainParams::create(2.0, 2);
    CVector z(2);
    z << 1.2, 0.0;
    CHECK_THROWS_AS(kobayashi(d, PointCoords(z), tv(1.0, 0.0)), Error);
    CHECK_THROWS_AS(kobayashi_reference(d, 1.0, tv(1.0, 0.0)), Error);
}

}
