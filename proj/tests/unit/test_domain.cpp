#include <doctest.h>

#include <cmath>

#include "core/domain.hpp"
#include "oracles.hpp"

using namespace egg;

namespace {

CVector vec(std::initializer_list<cplx> xs) {
    CVector v(static_cast<long>(xs.size()));
    long i = 0;
    for (const cplx& x : xs) v(i++) = x;
    return v;
}

PointCoords pt(std::initializer_list<cplx> xs) { return PointCoords(vec(xs)); }

}  // namespace

TEST_SUITE("domain") {

TEST_CASE("parameters are validated") {
    CHECK_THROWS_AS(DomainParams::create(0.3, 2), Error);
    CHECK_THROWS_AS(DomainParams::create(std::nan(""), 2), Error);
    CHECK_THROWS_AS(DomainParams::create(2.0, 1), Error);
    CHECK_THROWS_AS(DomainParams::create(2.0, 65), Error);
    const DomainParams d = DomainParams::create(2.0, 3);
    CHECK(d.m() == 2.0);
    CHECK(d.n() == 3);
    CHECK(d.m0_radius() == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-15));
    CHECK(d.has_m0_seam());
    CHECK_FALSE(DomainParams::create(1.0, 2).thin_set_is_seam());
    try {
        DomainParams::create(0.2, 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("region labels") {
    const DomainParams d = DomainParams::create(2.0, 2);
    CHECK(classify_region(d, pt({0.5, 0.0})) == RegionLabel::MMinus);
    CHECK(classify_region(d, pt({std::pow(2.0, -0.25), 0.0})) == RegionLabel::MZero);
    CHECK(classify_region(d, pt({0.9, 0.0})) == RegionLabel::MPlus);
    CHECK(classify_region(d, pt({0.0, 0.3})) == RegionLabel::Z);
    CHECK(classify_region(d, pt({1.0, 0.1})) == RegionLabel::Outside);
    CHECK(std::string(region_name(RegionLabel::MPlus)) == "M_PLUS");
    for (double m : {0.5, 0.75, 1.0, 3.0}) {
        const DomainParams e = DomainParams::create(m, 3);
        CHECK(classify_region(e, pt({0.0, 0.3, 0.0})) == RegionLabel::Z);
    }
    // no M+/M- split below m = 1
    CHECK(classify_region(DomainParams::create(0.75, 2), pt({0.9, 0.0})) == RegionLabel::Generic);
    // the M0 condition involves the reference coordinate, not |z1| alone
    const double rho = 0.5;
    const double r1 = std::pow(0.5 * (1 - rho * rho), 0.25);
    CHECK(classify_region(d, pt({r1, rho})) == RegionLabel::MZero);
}

TEST_CASE("gauge of the domain") {
    for (double m : {0.5, 0.75, 2.0}) {
        const DomainParams d = DomainParams::create(m, 3);
        CHECK(minkowski_gauge(d, TangentVector(vec({1.0, 0.0, 0.0}))) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(minkowski_gauge(d, TangentVector(vec({0.0, 0.5, 0.0}))) == doctest::Approx(0.5).epsilon(1e-14));
        Rng rng(3);
        for (int k = 0; k < 20; ++k) {
            const CVector v = random_direction(3, rng).v * rng.uniform(0.1, 3.0);
            CHECK(minkowski_gauge(d, TangentVector(v)) == doctest::Approx(oracle::gauge(m, v)).epsilon(1e-10));
        }
    }
    const DomainParams ball = DomainParams::create(1.0, 3);
    CHECK(minkowski_gauge(ball, TangentVector(vec({1.0, 1.0, 0.0}))) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("automorphism maps p to the reference axis") {
    const DomainParams d = DomainParams::create(0.75, 2);
    const PointCoords p = pt({0.5, 0.0});
    const PointCoords z = pt({cplx(0.2, 0.1), cplx(-0.3, 0.4)});
    const PointCoords w = egg_automorphism(d, p, z);
    CHECK(std::abs(w.z(0) - z.z(0)) < 1e-15);
    CHECK(std::abs(w.z(1) + z.z(1)) < 1e-15);
    const CMatrix J = automorphism_jacobian(d, p, z);
    CHECK(std::abs(J(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(J(1, 1) + 1.0) < 1e-15);
    CHECK(std::abs(J(0, 1)) < 1e-15);

    for (double m : {0.5, 0.75, 1.0, 2.0, 3.0}) {
        const DomainParams e = DomainParams::create(m, 3);
        Rng rng(17);
        for (int k = 0; k < 20; ++k) {
            const PointCoords q = random_point(e, rng);
            const PointCoords img = egg_automorphism(e, q, q);
            CHECK(std::abs(img.z(0)) == doctest::Approx(reference_coordinate(e, q)).epsilon(1e-12));
            CHECK(img.z.tail(2).norm() < 1e-12);
            // the image of an interior point stays inside
            const PointCoords other = random_point(e, rng);
            CHECK(defining_function(e, egg_automorphism(e, q, other)) < 0.0);
        }
        // p with p1 = 0: first coordinate of the image is 0
        const PointCoords q0 = pt({0.0, 0.3, cplx(0.1, 0.2)});
        CHECK(std::abs(egg_automorphism(e, q0, q0).z(0)) == 0.0);
    }
}

TEST_CASE("automorphism Jacobian against differencing") {
    for (double m : {0.5, 0.75, 2.0}) {
        const DomainParams d = DomainParams::create(m, 3);
        Rng rng(5);
        for (int k = 0; k < 10; ++k) {
            const PointCoords p = random_point(d, rng, 0.8);
            const PointCoords z = random_point(d, rng, 0.5);
            const CMatrix J = automorphism_jacobian(d, p, z);
            const CMatrix F = oracle::fd_jacobian(
                [&](const CVector& w) { return egg_automorphism(d, p, PointCoords(w)).z; }, z.z, 1e-6);
            CHECK((J - F).cwiseAbs().maxCoeff() < 1e-7 * (1.0 + J.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("composite automorphisms") {
    const DomainParams d = DomainParams::create(2.0, 3);
    Rng rng(8);
    for (int k = 0; k < 10; ++k) {
        const Automorphism a = random_automorphism(d, rng);
        const PointCoords z = random_point(d, rng);
        CHECK(defining_function(d, a.apply(d, z)) < 0.0);
        CHECK((a.unitary.adjoint() * a.unitary - CMatrix::Identity(2, 2)).norm() < 1e-13);
        const CMatrix F =
            oracle::fd_jacobian([&](const CVector& w) { return a.apply(d, PointCoords(w)).z; }, z.z, 1e-6);
        CHECK((a.jacobian(d, z) - F).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("inputs are checked") {
    const DomainParams d = DomainParams::create(2.0, 2);
    CHECK_THROWS_AS(require_inside(d, pt({1.0, 0.5})), Error);
    CHECK_THROWS_AS(classify_region(d, pt({0.1, 0.1, 0.1})), Error);
    CHECK_THROWS_AS(classify_region(d, pt({std::nan(""), 0.1})), Error);
    CHECK(seam_distance(d, pt({0.0, 0.2})) == 0.0);
    CHECK(boundary_distance(d, pt({0.0, 0.0})) == doctest::Approx(1.0));
}

TEST_CASE("seeded sampling is reproducible") {
    const DomainParams d = DomainParams::create(0.75, 4);
    Rng a(99), b(99);
    for (int k = 0; k < 5; ++k) CHECK((random_point(d, a).z - random_point(d, b).z).norm() == 0.0);
}

}
