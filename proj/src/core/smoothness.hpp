#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "domain.hpp"

namespace egg {

using ScalarPath = std::function<double(double)>;

enum class SmoothnessVerdict { Holder, Kink, Smooth, Inconclusive };
const char* verdict_name(SmoothnessVerdict v);

enum class Seam { Z, MZero, Junction };
const char* seam_name(Seam s);
Seam parse_seam(const std::string& s);

struct ProbeOptions {
    double step_max = 1e-2;
    double step_min = 1e-5;
    int scales = 12;
    double jump_step = 1e-3;
    double control_offset = 0.06;
    double jump_factor = 10.0;  // a jump must exceed this multiple of the noise
    double min_r_squared = 0.9;
};

struct JumpEstimate {
    double left = 0.0;   // one-sided derivative estimate from t < 0
    double right = 0.0;  // from t > 0
    double jump = 0.0;
    double error = 0.0;     // Richardson error estimate (both sides)
    double roundoff = 0.0;  // rounding bound for the smallest step
};

// one-sided d-th derivative estimates at t = 0 (forward differences, two
// Richardson levels starting from step h)
JumpEstimate derivative_jump(const ScalarPath& f, int d, double h);

struct SmoothnessReport {
    std::string path;
    std::string component;
    int order = 0;            // probes the k-th derivative
    double exponent = 1.0;    // Holder exponent of the k-th derivative, clamped to [0, 1]
    double r_squared = 1.0;
    int scales_used = 0;
    bool below_noise = false;  // increments vanish into rounding at every usable scale
    double step_min = 0.0;
    double step_max = 0.0;
    double jump = 0.0;         // jump of derivative k + 1 across the seam
    double jump_error = 0.0;
    double noise = 0.0;        // pooled control-path noise for the jump
    bool jump_detected = false;
    SmoothnessVerdict verdict = SmoothnessVerdict::Smooth;
};

// Holder exponent of the order-th derivative of f across t = 0 from the log-log
// slope of straddling (order+1)-th differences over geometric steps. control (may
// be empty) is a smooth reference path used to calibrate the jump noise.
SmoothnessReport holder_exponent(const ScalarPath& f, int order, const ScalarPath& control,
                                 const ProbeOptions& opt = {});

// Which scalar to probe: an entry of the Wu tensor (1-based, real part), or the
// squared Kobayashi norm along a fixed direction. The junction seam ignores it.
struct ComponentSelector {
    enum class Kind { WuEntry, KobayashiSquared, IndicatrixY } kind = Kind::WuEntry;
    int i = 1;
    int j = 1;
    bool imaginary = false;
    std::string str() const;
};
ComponentSelector parse_component(const std::string& s);
ComponentSelector default_component(const DomainParams& d, Seam s);

struct RegularityOptions {
    ProbeOptions probe;
    int max_order = 3;
    int paths = 1;
    double junction_p1 = 0.3;
};

// Straight transverse paths through seeded base points on the seam; one report per
// path and derivative order 0..max_order
std::vector<SmoothnessReport> regularity_scan(const DomainParams& d, Seam seam, const ComponentSelector& c,
                                              std::uint64_t seed, const RegularityOptions& opt = {},
                                              int threads = 0);

struct RegularityClass {
    int continuous_order = -1;  // -1: no non-smoothness found up to max order
    double exponent = 1.0;
    bool inconclusive = false;
    std::string label;
};
// Summarise the reports of one path
RegularityClass classify_regularity(const std::vector<SmoothnessReport>& reports);

}  // namespace egg
