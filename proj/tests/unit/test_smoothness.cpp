#include <doctest.h>

#include <cmath>

#include "core/smoothness.hpp"
#include "core/verify.hpp"

using namespace egg;

namespace {

const ScalarPath control = [](double t) { return std::cos(t) + 0.3 * t; };

}  // namespace

TEST_SUITE("smoothness") {

TEST_CASE("synthetic Holder exponents") {
    for (double a : {0.3, 0.5, 0.7}) {
        const SmoothnessReport r = holder_exponent([a](double t) { return std::pow(std::abs(t), a); }, 0, control);
        CHECK(r.verdict == SmoothnessVerdict::Holder);
        CHECK(r.exponent == doctest::Approx(a).epsilon(0.05 / a));
    }
    const SmoothnessReport r15 = holder_exponent([](double t) { return std::pow(std::abs(t), 1.5); }, 1, control);
    CHECK(r15.verdict == SmoothnessVerdict::Holder);
    CHECK(std::abs(r15.exponent - 0.5) < 0.05);
    const SmoothnessReport r25 = holder_exponent([](double t) { return std::pow(std::abs(t), 2.5); }, 2, control);
    CHECK(r25.verdict == SmoothnessVerdict::Holder);
    CHECK(std::abs(r25.exponent - 0.5) < 0.05);
    for (int k = 0; k <= 2; ++k) {
        CAPTURE(k);
        CHECK(holder_exponent([](double t) { return 1 + t + t * t; }, k, control).verdict == SmoothnessVerdict::Smooth);
    }
    CHECK(check_smoothness_calibration().passed);
}

TEST_CASE("jumps") {
    // t|t| has a jump 4 in its second derivative
    const ScalarPath f = [](double t) { return t * std::abs(t); };
    const SmoothnessReport r = holder_exponent(f, 1, control);
    CHECK(r.verdict == SmoothnessVerdict::Kink);
    CHECK(r.jump_detected);
    CHECK(std::abs(r.jump) == doctest::Approx(4.0).epsilon(1e-3));
    const JumpEstimate j = derivative_jump(f, 2, 1e-3);
    CHECK(j.left == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(j.right == doctest::Approx(2.0).epsilon(1e-6));
    const JumpEstimate s = derivative_jump([](double t) { return std::exp(t); }, 1, 1e-3);
    CHECK(std::abs(s.jump) < 1e-6);
}

TEST_CASE("parsing and labels") {
    CHECK(parse_seam("Z") == Seam::Z);
    CHECK(parse_seam("M_ZERO") == Seam::MZero);
    CHECK(parse_seam("junction") == Seam::Junction);
    CHECK_THROWS_AS(parse_seam("M1"), Error);
    const ComponentSelector c = parse_component("wu:1,2:im");
    CHECK(c.i == 1);
    CHECK(c.j == 2);
    CHECK(c.imaginary);
    CHECK(c.str() == "wu:1,2:im");
    CHECK(parse_component("K2").kind == ComponentSelector::Kind::KobayashiSquared);
    CHECK_THROWS_AS(parse_component("wu:0,1"), Error);
    CHECK_THROWS_AS(parse_component("wu:1,2:re"), Error);

    SmoothnessReport a, b;
    a.order = 0;
    b.order = 1;
    b.verdict = SmoothnessVerdict::Holder;
    b.exponent = 0.5;
    CHECK(classify_regularity({b, a}).label == "C^{1,0.50}");
    b.verdict = SmoothnessVerdict::Kink;
    CHECK(classify_regularity({a, b}).continuous_order == 1);
    b.verdict = SmoothnessVerdict::Smooth;
    CHECK(classify_regularity({a, b}).continuous_order == -1);
}

TEST_CASE("seam regularity of the Wu metric") {
    // C^{1,1/2} across Z for m = 3/4
    CHECK(check_seam_regularity(DomainParams::create(0.75, 2), Seam::Z, 42, 1).passed);
    // derivative jump across M0 for m = 2
    CHECK(check_seam_regularity(DomainParams::create(2.0, 2), Seam::MZero, 42, 1).passed);
    // no jump across Z through order 3 for m = 2
    CHECK(check_seam_regularity(DomainParams::create(2.0, 2), Seam::Z, 42, 1).passed);
    // C^{2,1/2} across Z for m = 5/4
    CHECK(check_seam_regularity(DomainParams::create(1.25, 2), Seam::Z, 42, 1).passed);

    const DomainParams d = DomainParams::create(2.0, 2);
    RegularityOptions o;
    o.max_order = 1;
    const auto reps = regularity_scan(d, Seam::MZero, default_component(d, Seam::MZero), 7, o, 1);
    REQUIRE(reps.size() == 2);
    CHECK(reps[1].verdict == SmoothnessVerdict::Kink);
    CHECK(std::abs(reps[1].jump) > o.probe.jump_factor * reps[1].noise);
}

}
