#include <doctest.h>

#include <cmath>

#include "core/kobayashi.hpp"
#include "core/wu_fitting.hpp"
#include "core/wu_tensor.hpp"
#include "oracles.hpp"

using namespace egg;

namespace {

PointCoords pt(std::initializer_list<cplx> xs) {
    CVector v(static_cast<long>(xs.size()));
    long i = 0;
    for (const cplx& x : xs) v(i++) = x;
    return PointCoords(v);
}

// d^2 f / dz_i dzbar_j from real second differences
cplx levi(const std::function<double(const CVector&)>& f, const CVector& z, int i, int j, double h) {
    auto mixed = [&](cplx a, cplx b) {
        CVector pp = z, pm = z, mp = z, mm = z;
        pp(i) += h * a;
        pp(j) += h * b;
        pm(i) += h * a;
        pm(j) -= h * b;
        mp(i) -= h * a;
        mp(j) += h * b;
        mm(i) -= h * a;
        mm(j) -= h * b;
        return (f(pp) - f(pm) - f(mp) + f(mm)) / (4 * h * h);
    };
    const cplx I(0, 1);
    return 0.25 * (mixed(1.0, 1.0) + mixed(I, I) + I * (mixed(1.0, I) - mixed(I, 1.0)));
}

}  // namespace

TEST_SUITE("wu-tensor") {

TEST_CASE("chord formula entries") {
    const DomainParams d = DomainParams::create(0.75, 2);
    const WuTensorResult r = wu_tensor(d, pt({0.3, 0.2}));
    CHECK(r.formula == TensorFormula::Chord);
    const double a = 1 - 0.04;
    const double h12 = std::pow(a, -1 + 1 / 0.75) * 0.3 * 0.2 / (0.75 * std::pow(std::pow(a, 1 / 0.75) - 0.09, 2));
    CHECK(std::abs(r.form.h(0, 1) - h12) < 1e-14);
    CHECK((wu_matrix(d, pt({0.0, 0.0})) - CMatrix::Identity(2, 2)).norm() < 1e-14);

    for (double m : {0.5, 0.75}) {
        const DomainParams e = DomainParams::create(m, 3);
        Rng rng(41);
        for (int k = 0; k < 30; ++k) {
            const PointCoords z = random_point(e, rng);
            const CMatrix H = wu_matrix(e, z), O = oracle::chord_tensor(m, z.z);
            CHECK((H - O).cwiseAbs().maxCoeff() < 1e-11 * (1 + O.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("M+ tensor on the axis and as a Levi form") {
    const DomainParams d = DomainParams::create(2.0, 2);
    const double p = 0.9, q = std::pow(p, 4);
    const CMatrix H = wu_matrix(d, pt({p, 0.0}));
    CHECK(H(0, 0).real() == doctest::Approx(4 * p * p / ((1 - q) * (1 - q))).epsilon(1e-13));
    CHECK(H(1, 1).real() == doctest::Approx(1 / (1 - q)).epsilon(1e-13));
    CHECK(std::abs(H(0, 1)) < 1e-15);

    const DomainParams e = DomainParams::create(2.0, 3);
    auto rho = [&](const CVector& z) { return -std::log(-oracle::rho(2.0, z)); };
    CVector z(3);
    z << std::polar(0.88, 0.4), cplx(0.1, -0.05), cplx(0.0, 0.08);
    REQUIRE(classify_region(e, PointCoords(z)) == RegionLabel::MPlus);
    const CMatrix W = wu_matrix(e, PointCoords(z));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::abs(W(i, j) - levi(rho, z, i, j, 1e-4)) < 1e-5 * (1 + std::abs(W(i, j))));
}

TEST_CASE("closed form against the pullback") {
    for (double m : {0.5, 0.75, 1.0, 1.25, 2.0, 3.0}) {
        const DomainParams d = DomainParams::create(m, 3);
        Rng rng(7);
        for (int k = 0; k < 30; ++k) {
            const PointCoords z = random_point(d, rng);
            if (seam_distance(d, z) < 1e-6) continue;
            const CMatrix H = wu_matrix(d, z), P = pullback_tensor(d, z).h;
            CHECK((H - P).norm() < 1e-7 * P.norm());
        }
        // on the reference axis the pullback is the diagonal fit
        const WuEllipsoidDiag f = fit_reference(d, 0.4);
        const CMatrix P = pullback_tensor(d, pt({0.4, 0.0, 0.0})).h;
        CHECK(P(0, 0).real() == doctest::Approx(f.r1).epsilon(1e-14));
        CHECK(P(2, 2).real() == doctest::Approx(f.r2).epsilon(1e-14));
    }
}

TEST_CASE("form invariants") {
    for (double m : {0.75, 2.0}) {
        const DomainParams d = DomainParams::create(m, 3);
        Rng rng(9);
        for (int k = 0; k < 30; ++k) {
            const PointCoords z = random_point(d, rng);
            const WuTensorResult r = wu_tensor(d, z);
            CHECK(r.form.hermitian_defect() == 0.0);
            CHECK(r.form.min_eig() > 0.0);
        }
    }
    // Z and M0 use limits of the neighbouring formula
    const DomainParams d = DomainParams::create(2.0, 2);
    const WuTensorResult onz = wu_tensor(d, pt({0.0, 0.3}));
    CHECK(onz.region == RegionLabel::Z);
    CHECK(onz.form.min_eig() > 0.0);
    const WuTensorResult near = wu_tensor(d, pt({1e-7, 0.3}));
    CHECK((onz.form.h - near.form.h).norm() < 1e-6);
    const WuTensorResult m0 = wu_tensor(d, pt({std::pow(2.0, -0.25), 0.0}));
    CHECK(m0.region == RegionLabel::MZero);
    CHECK((m0.form.h - wu_matrix(d, pt({std::pow(2.0, -0.25) * (1 - 1e-9), 0.0}))).norm() < 1e-6);
}

TEST_CASE("Wu norm") {
    const DomainParams d = DomainParams::create(2.0, 2);
    const WuEllipsoidDiag f = fit_reference(d, 0.5);
    CVector e1(2), zero = CVector::Zero(2);
    e1 << 1.0, 0.0;
    CHECK(wu_norm(d, pt({0.5, 0.0}), e1) == doctest::Approx(std::sqrt(f.r1)).epsilon(1e-14));
    CHECK(wu_norm(d, pt({0.5, 0.0}), zero) == 0.0);
    for (double m : {0.5, 0.75, 2.0, 3.0}) {
        const DomainParams e = DomainParams::create(m, 3);
        Rng rng(13);
        for (int k = 0; k < 100; ++k) {
            const PointCoords z = random_point(e, rng);
            const TangentVector v = random_direction(3, rng);
            CHECK(wu_norm(e, z, v.v) <= kobayashi(e, z, v).norm + 1e-9);
            CHECK(wu_norm(e, z, 2.0 * v.v) == doctest::Approx(2 * wu_norm(e, z, v.v)).epsilon(1e-14));
        }
    }
}

TEST_CASE("Kahler defect") {
    const DomainParams d = DomainParams::create(2.0, 2);
    CHECK(kahler_defect(d, pt({0.9, 0.05})) < 1e-6);
    CHECK(kahler_defect(d, pt({0.4, 0.1})) > 1e-3);
    CHECK(kahler_defect(DomainParams::create(0.75, 2), pt({0.5, 0.2})) > 1e-3);
    CHECK(kahler_defect(DomainParams::create(1.0, 3), pt({0.3, 0.2, cplx(0.1, 0.1)})) < 1e-6);
    CHECK_THROWS_AS(kahler_defect(d, pt({1e-9, 0.3})), Error);
    CHECK_THROWS_AS(wu_tensor(d, pt({0.9, 0.6})), Error);
}

}
