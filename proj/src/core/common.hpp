#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace egg {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

constexpr double kEps = std::numeric_limits<double>::epsilon();

enum class ErrorKind { InvalidArgument, Domain, Numerical, Configuration, SeamProximity, Unsupported };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

// |t|^e as exp(e log|t|); exactly 0 at t = 0 for e > 0
inline double abs_pow(double t, double e) {
    if (e == 0.0) return 1.0;
    t = std::abs(t);
    if (t == 0.0) return e > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::exp(e * std::log(t));
}

inline double sq(double x) { return x * x; }

// seeded generator shared by samplers; distributions are built from raw draws so
// sequences do not depend on the standard library's distribution algorithms
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    cplx unit_phase() { return std::polar(1.0, uniform(0.0, 2.0 * M_PI)); }
    std::uint64_t next() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace egg
