#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "eggmetrics/eggmetrics.h"

namespace {

struct Domain {
    egg_domain* d = nullptr;
    Domain(double m, int n) { REQUIRE(egg_domain_create(m, n, &d) == EGG_OK); }
    ~Domain() { egg_domain_destroy(d); }
};

double abs_t(double t, void*) { return std::pow(std::abs(t), 1.5); }

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("handles and status codes") {
    CHECK(std::string(egg_version()).size() > 0);
    egg_domain* d = nullptr;
    CHECK(egg_domain_create(0.2, 2, &d) == EGG_ERR_INVALID_ARGUMENT);
    CHECK(d == nullptr);
    CHECK(std::string(egg_last_error()).find("m") != std::string::npos);
    CHECK(egg_domain_create(2.0, 2, nullptr) == EGG_ERR_INVALID_ARGUMENT);
    CHECK(std::string(egg_status_name(EGG_ERR_SEAM_PROXIMITY)) == "SEAM_PROXIMITY");
    egg_domain_destroy(nullptr);

    Domain dom(2.0, 3);
    CHECK(egg_domain_m(dom.d) == 2.0);
    CHECK(egg_domain_n(dom.d) == 3);
    egg_complex out[3];
    const egg_complex bad[3] = {{1.0, 0.0}, {0.5, 0.0}, {0.0, 0.0}};
    egg_complex v[3] = {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    double k = 0.0;
    CHECK(egg_kobayashi(dom.d, bad, v, &k) == EGG_ERR_DOMAIN);
    CHECK(egg_automorphism(dom.d, bad, bad, out) == EGG_ERR_DOMAIN);
    CHECK(egg_kobayashi(dom.d, nullptr, v, &k) == EGG_ERR_INVALID_ARGUMENT);
    egg_seam s;
    CHECK(egg_parse_seam("M_ZERO", &s) == EGG_OK);
    CHECK(s == EGG_SEAM_M_ZERO);
    CHECK(egg_parse_seam("nope", &s) == EGG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("values through the C interface") {
    Domain dom(2.0, 2);
    const egg_complex z[2] = {{0.5, 0.0}, {0.0, 0.0}};
    egg_region r;
    REQUIRE(egg_classify(dom.d, z, &r) == EGG_OK);
    CHECK(r == EGG_REGION_M_MINUS);

    const egg_complex v[2] = {{0.0, 0.0}, {1.0, 0.0}};
    double k = 0.0;
    egg_branch b;
    REQUIRE(egg_kobayashi_reference(dom.d, 0.5, v, &k, &b) == EGG_OK);
    CHECK(k == doctest::Approx(1 / std::sqrt(1 - 0.0625)).epsilon(1e-15));
    CHECK(b == EGG_BRANCH_LOWER);

    egg_fit f;
    REQUIRE(egg_fit_reference(dom.d, 0.9, &f) == EGG_OK);
    CHECK(f.fit_case == EGG_FIT_LOWER_LINE);
    const double q = std::pow(0.9, 4);
    CHECK(f.r2 == doctest::Approx(1 / (1 - q)).epsilon(1e-14));

    egg_complex h[4];
    egg_tensor_info info;
    const egg_complex zp[2] = {{0.9, 0.0}, {0.0, 0.0}};
    REQUIRE(egg_wu_tensor(dom.d, zp, h, &info) == EGG_OK);
    CHECK(h[0].re == doctest::Approx(4 * 0.81 / ((1 - q) * (1 - q))).epsilon(1e-13));
    CHECK(info.region == EGG_REGION_M_PLUS);
    CHECK(info.min_eig > 0);

    double wu = 0.0;
    const egg_complex e1[2] = {{1.0, 0.0}, {0.0, 0.0}};
    REQUIRE(egg_wu_norm(dom.d, zp, e1, &wu) == EGG_OK);
    CHECK(wu == doctest::Approx(std::sqrt(f.r1)).epsilon(1e-14));

    double sec = 0.0;
    REQUIRE(egg_holomorphic_curvature(dom.d, zp, e1, 0.0, &sec) == EGG_OK);
    CHECK(sec == doctest::Approx(-2.0).epsilon(1e-3));

    const egg_complex onz[2] = {{1e-9, 0.0}, {0.3, 0.0}};
    double defect = 0.0;
    CHECK(egg_kahler_defect(dom.d, onz, 0.0, &defect) == EGG_ERR_SEAM_PROXIMITY);
    CHECK(std::strlen(egg_last_error()) > 0);

    std::vector<egg_kcurve_sample> g(20);
    REQUIRE(egg_kcurve_grid(dom.d, 0.3, EGG_CURVE_UPPER, 20, g.data()) == EGG_OK);
    CHECK(g.back().alpha == doctest::Approx(1.0));
}

TEST_CASE("scans and probes") {
    Domain dom(0.75, 2);
    egg_grid_spec g;
    egg_grid_spec_default(&g);
    g.z1_count = 2;
    g.zhat_count = 2;
    egg_curvature_scan* cs = nullptr;
    REQUIRE(egg_curvature_scan_run(dom.d, &g, 42, 1, &cs) == EGG_OK);
    REQUIRE(egg_curvature_scan_size(cs) == 4);
    egg_curvature_record rec;
    egg_complex pt[2];
    REQUIRE(egg_curvature_scan_record(cs, 0, &rec, pt) == EGG_OK);
    CHECK(rec.max_sec < 0);
    CHECK(egg_curvature_scan_record(cs, 4, &rec, nullptr) == EGG_ERR_INVALID_ARGUMENT);
    egg_curvature_scan_destroy(cs);

    egg_probe_options o;
    egg_probe_options_default(&o);
    egg_smoothness_report rep;
    REQUIRE(egg_holder_exponent(abs_t, nullptr, 1, nullptr, nullptr, &o, &rep) == EGG_OK);
    CHECK(rep.verdict == EGG_VERDICT_HOLDER);
    CHECK(rep.exponent == doctest::Approx(0.5).epsilon(0.1));

    o.max_order = 1;
    egg_smoothness_scan* ss = nullptr;
    REQUIRE(egg_smoothness_scan_run(dom.d, EGG_SEAM_Z, nullptr, 42, &o, 1, &ss) == EGG_OK);
    CHECK(egg_smoothness_scan_paths(ss) == 1);
    CHECK(egg_smoothness_scan_size(ss) == 2);
    egg_regularity reg;
    REQUIRE(egg_smoothness_scan_classify(ss, 0, &reg) == EGG_OK);
    CHECK(reg.continuous_order == 1);
    egg_smoothness_scan_destroy(ss);
    CHECK(egg_smoothness_scan_run(dom.d, EGG_SEAM_Z, "wu:9,9", 42, &o, 1, &ss) == EGG_ERR_INVALID_ARGUMENT);

    egg_verify* v = nullptr;
    REQUIRE(egg_verify_run(dom.d, 42, 1, &v) == EGG_OK);
    REQUIRE(egg_verify_size(v) > 5);
    for (size_t i = 0; i < egg_verify_size(v); ++i) {
        egg_check c;
        REQUIRE(egg_verify_record(v, i, &c) == EGG_OK);
        CAPTURE(c.name);
        CHECK(c.passed == 1);
    }
    egg_verify_destroy(v);
}

}
