#include <doctest.h>

#include <cmath>

#include "core/wu_fitting.hpp"
#include "oracles.hpp"

using namespace egg;

TEST_SUITE("wu-fitting") {

TEST_CASE("X equation") {
    const DomainParams d = DomainParams::create(2.0, 2);
    CHECK(solve_X(d, std::pow(2.0, -0.25)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(solve_X(d, 1e-4) < 1e-6);
    // m = 2, s = 1: X^3 - 3 p^4 X + 2 p^8 = 0, root in (P, 1)
    const double p = 0.5, q = std::pow(p, 4);
    const double X = oracle::bisect([&](double x) { return x * x * x - 3 * q * x + 2 * q * q; }, std::sqrt(q) * 1.0000001, 1.0);
    CHECK(solve_X(d, p) == doctest::Approx(X).epsilon(1e-13));
    for (double m : {1.25, 2.0, 3.0})
        for (double s : {1.0, 0.8}) {
            const DomainParams e = DomainParams::create(m, 2);
            const double pm = std::pow(0.3 * s * s, 1.0 / (2 * m));
            const double x = solve_X(e, pm, s);
            CHECK(std::abs(oracle::x_equation(m, pm, s, x)) < 1e-13);
        }
    CHECK_THROWS_AS(solve_X(DomainParams::create(0.75, 2), 0.3), Error);
    CHECK_THROWS_AS(solve_X(d, 0.9), Error);
}

TEST_CASE("closed forms") {
    const DomainParams a = DomainParams::create(0.75, 2);
    const WuEllipsoidDiag f = fit_reference(a, 0.5);
    CHECK(fit_case(a, 0.5) == FitCase::Chord);
    CHECK(f.r1 == doctest::Approx(16.0 / 9.0).epsilon(1e-15));
    CHECK(f.r2 == doctest::Approx(1.0 / (1 - std::pow(0.5, 1.5))).epsilon(1e-15));

    const DomainParams d = DomainParams::create(2.0, 2);
    const WuEllipsoidDiag g = fit_reference(d, 0.9);
    CHECK(fit_case(d, 0.9) == FitCase::LowerLine);
    CHECK(g.r1 == doctest::Approx(4 * 0.81 / std::pow(1 - std::pow(0.9, 4), 2)).epsilon(1e-14));
    CHECK(g.r2 == doctest::Approx(1 / (1 - std::pow(0.9, 4))).epsilon(1e-14));
    CHECK(fit_case(d, 0.5) == FitCase::UpperContact);

    const double p0 = std::pow(2.0, -0.25);
    const WuEllipsoidDiag up = fit_upper_contact(d, p0), lo = fit_lower_line(d, p0);
    CHECK(up.r1 == doctest::Approx(lo.r1).epsilon(1e-13));
    CHECK(up.r2 == doctest::Approx(lo.r2).epsilon(1e-13));
    CHECK(lo.r1 == doctest::Approx(4 * 4 * std::pow(p0, 2)).epsilon(1e-14));

    const WuEllipsoidDiag o = fit_at_origin(d);
    CHECK(o.r1 == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    CHECK(o.r2 == doctest::Approx(0.75).epsilon(1e-15));
    const WuEllipsoidDiag small = fit_reference(d, 1e-7);
    CHECK(small.r1 == doctest::Approx(o.r1).epsilon(1e-9));
    CHECK(small.r2 == doctest::Approx(o.r2).epsilon(1e-9));
}

TEST_CASE("contact point lies on the upper curve") {
    const DomainParams d = DomainParams::create(2.0, 2);
    const ContactPoint c = contact_point(d, 0.5);
    CHECK(c.alpha == doctest::Approx(std::sqrt(solve_X(d, 0.5))).epsilon(1e-14));
    const oracle::XY o = oracle::upper_curve(2.0, 0.5, c.alpha);
    CHECK(c.x == doctest::Approx(o.x).epsilon(1e-13));
    CHECK(c.y == doctest::Approx(o.y).epsilon(1e-13));
    // the fitted line touches at the contact point with r1 y = r2 x = 1/2
    const WuEllipsoidDiag f = fit_reference(d, 0.5);
    CHECK(f.r1 * c.y == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.r2 * c.x == doctest::Approx(0.5).epsilon(1e-12));
    // near M0 the contact point approaches the joining point
    const double p = std::pow(2.0, -0.25) * (1 - 1e-9), q = std::pow(p, 4);
    const ContactPoint j = contact_point(d, p);
    CHECK(j.x == doctest::Approx((1 - q) * (1 - q)).epsilon(1e-6));
    CHECK(j.y == doctest::Approx(p * p * (1 - q) * (1 - q) / 4).epsilon(1e-6));
}

TEST_CASE("brute-force oracle agrees with the closed forms") {
    struct Case {
        double m, p;
    };
    for (const Case& c : {Case{0.5, 0.2}, Case{0.5, 0.8}, Case{0.75, 0.5}, Case{2.0, 0.3}, Case{2.0, 0.5},
                          Case{2.0, 0.84}, Case{2.0, 0.9}, Case{3.0, 0.6}}) {
        CAPTURE(c.m);
        CAPTURE(c.p);
        const DomainParams d = DomainParams::create(c.m, 2);
        const WuEllipsoidDiag f = fit_reference(d, c.p);
        const oracle::Fit o = oracle::brute_force_fit(c.m, c.p);
        CHECK(f.r1 == doctest::Approx(o.r1).epsilon(1e-5));
        CHECK(f.r2 == doctest::Approx(o.r2).epsilon(1e-5));
        CHECK(containment_violation(d, c.p, f) <= 1e-9);
    }
}

TEST_CASE("library oracle") {
    for (double m : {0.5, 0.75})
        for (double p : {0.2, 0.5, 0.8}) {
            const DomainParams d = DomainParams::create(m, 2);
            const WuEllipsoidDiag f = fit_reference(d, p), o = fit_oracle(d, p);
            CHECK(o.r1 == doctest::Approx(f.r1).epsilon(1e-5));
            CHECK(o.r2 == doctest::Approx(f.r2).epsilon(1e-5));
        }
    const DomainParams d = DomainParams::create(2.0, 2);
    for (double p : {0.3, 0.5, 0.84, 0.9}) {
        const WuEllipsoidDiag f = fit_reference(d, p), o = fit_oracle(d, p);
        CHECK(o.r1 == doctest::Approx(f.r1).epsilon(1e-5));
        CHECK(o.r2 == doctest::Approx(f.r2).epsilon(1e-5));
    }
    // a larger ellipsoid fails containment
    const WuEllipsoidDiag f = fit_reference(d, 0.5);
    CHECK(containment_violation(d, 0.5, WuEllipsoidDiag{f.r1 * 1.01, f.r2 * 1.01}) > 1e-3);
}

TEST_CASE("invalid reference coordinates") {
    const DomainParams d = DomainParams::create(2.0, 2);
    CHECK_THROWS_AS(fit_reference(d, 1.0), Error);
    CHECK_THROWS_AS(fit_reference(d, -0.1), Error);
    CHECK_THROWS_AS(fit_oracle(d, 0.5, 4), Error);
}

}
