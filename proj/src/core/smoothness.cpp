#include "smoothness.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "indicatrix.hpp"
#include "kobayashi.hpp"
#include "parallel.hpp"
#include "wu_tensor.hpp"

namespace egg {

const char* verdict_name(SmoothnessVerdict v) {
    switch (v) {
        case SmoothnessVerdict::Holder: return "HOLDER";
        case SmoothnessVerdict::Kink: return "KINK";
        case SmoothnessVerdict::Smooth: return "SMOOTH";
        case SmoothnessVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "UNKNOWN";
}

const char* seam_name(Seam s) {
    switch (s) {
        case Seam::Z: return "Z";
        case Seam::MZero: return "M_ZERO";
        case Seam::Junction: return "JUNCTION";
    }
    return "UNKNOWN";
}

Seam parse_seam(const std::string& s) {
    if (s == "Z" || s == "z") return Seam::Z;
    if (s == "M_ZERO" || s == "M0" || s == "m0") return Seam::MZero;
    if (s == "JUNCTION" || s == "junction") return Seam::Junction;
    fail(ErrorKind::InvalidArgument, "unknown seam '" + s + "' (expected Z, M_ZERO or JUNCTION)");
}

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// first-order one-sided estimate of the d-th derivative with signed step s
double one_sided(const ScalarPath& f, int d, double s, double& fmax) {
    double acc = 0.0;
    for (int j = 0; j <= d; ++j) {
        const double v = f(j * s);
        fmax = std::max(fmax, std::abs(v));
        acc += (((d - j) % 2) ? -1.0 : 1.0) * binom(d, j) * v;
    }
    return acc / std::pow(s, d);
}

}  // namespace

JumpEstimate derivative_jump(const ScalarPath& f, int d, double h) {
    if (d < 1) fail(ErrorKind::InvalidArgument, "jump order must be >= 1");
    if (!(h > 0.0)) fail(ErrorKind::InvalidArgument, "jump step must be positive");
    double fmax = 0.0;
    auto side = [&](double sgn, double& est, double& err) {
        const double d1 = one_sided(f, d, sgn * h, fmax);
        const double d2 = one_sided(f, d, sgn * h / 2.0, fmax);
        const double d4 = one_sided(f, d, sgn * h / 4.0, fmax);
        const double r1 = 2.0 * d2 - d1;
        const double r2 = 2.0 * d4 - d2;
        est = r2;
        err = std::abs(r1 - r2);
    };
    JumpEstimate j;
    double el, er;
    side(-1.0, j.left, el);
    side(1.0, j.right, er);
    j.jump = std::abs(j.right - j.left);
    j.error = el + er;
    j.roundoff = 4.0 * kEps * fmax * (std::pow(2.0, 2 * d + 1) + std::pow(2.0, d)) / std::pow(h / 4.0, d);
    return j;
}

SmoothnessReport holder_exponent(const ScalarPath& f, int order, const ScalarPath& control, const ProbeOptions& opt) {
    if (order < 0 || order > 6) fail(ErrorKind::InvalidArgument, "probe order must lie in [0, 6]");
    if (opt.scales < 6) fail(ErrorKind::InvalidArgument, "the exponent regression needs at least 6 step scales");
    if (!(opt.step_max > opt.step_min && opt.step_min > 0.0))
        fail(ErrorKind::InvalidArgument, "probe steps must satisfy 0 < step_min < step_max");
    SmoothnessReport r;
    r.order = order;
    r.step_min = opt.step_min;
    r.step_max = opt.step_max;
    const int K = order + 1;
    const int shift = K / 2;
    std::vector<double> lx, ly;
    for (int s = 0; s < opt.scales; ++s) {
        const double h = opt.step_max * std::pow(opt.step_min / opt.step_max, static_cast<double>(s) / (opt.scales - 1));
        double acc = 0.0, fmax = 0.0, csum = 0.0;
        for (int j = 0; j <= K; ++j) {
            const double v = f((j - shift) * h);
            const double c = (((K - j) % 2) ? -1.0 : 1.0) * binom(K, j);
            acc += c * v;
            csum += std::abs(c);
            fmax = std::max(fmax, std::abs(v));
        }
        if (std::abs(acc) <= 64.0 * kEps * csum * fmax) continue;
        lx.push_back(std::log(h));
        ly.push_back(std::log(std::abs(acc) / std::pow(h, order)));
    }
    r.scales_used = static_cast<int>(lx.size());
    if (r.scales_used < 6) {
        r.below_noise = true;
        r.exponent = 1.0;
    } else {
        const double n = static_cast<double>(lx.size());
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            mx += lx[i];
            my += ly[i];
        }
        mx /= n;
        my /= n;
        double sxx = 0, sxy = 0, syy = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            sxx += sq(lx[i] - mx);
            sxy += (lx[i] - mx) * (ly[i] - my);
            syy += sq(ly[i] - my);
        }
        const double slope = sxy / sxx;
        r.r_squared = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
        r.exponent = std::clamp(slope, 0.0, 1.0);
    }

    const JumpEstimate je = derivative_jump(f, K, opt.jump_step);
    r.jump = je.jump;
    r.jump_error = je.error;
    double noise = je.roundoff;
    if (control) {
        const JumpEstimate jc = derivative_jump(control, K, opt.jump_step);
        noise = std::max({noise, jc.jump, jc.error, jc.roundoff});
    }
    r.noise = noise;
    r.jump_detected = r.jump > opt.jump_factor * std::max({noise, je.error, je.roundoff});

    if (!r.below_noise && r.r_squared < opt.min_r_squared && r.exponent < 0.9)
        r.verdict = SmoothnessVerdict::Inconclusive;
    else if (r.exponent < 0.9)
        r.verdict = SmoothnessVerdict::Holder;
    else if (r.jump_detected)
        r.verdict = SmoothnessVerdict::Kink;
    else
        r.verdict = SmoothnessVerdict::Smooth;
    return r;
}

std::string ComponentSelector::str() const {
    switch (kind) {
        case Kind::KobayashiSquared: return "kobayashi";
        case Kind::IndicatrixY: return "indicatrix";
        case Kind::WuEntry: break;
    }
    std::ostringstream os;
    os << "wu:" << i << "," << j << (imaginary ? ":im" : "");
    return os.str();
}

ComponentSelector parse_component(const std::string& s) {
    ComponentSelector c;
    if (s == "kobayashi" || s == "K2") {
        c.kind = ComponentSelector::Kind::KobayashiSquared;
        return c;
    }
    if (s == "indicatrix") {
        c.kind = ComponentSelector::Kind::IndicatrixY;
        return c;
    }
    int i = 0, j = 0;
    char tail[8] = {0};
    const int got = std::sscanf(s.c_str(), "wu:%d,%d:%3s", &i, &j, tail);
    if (got < 2 || i < 1 || j < 1 || (got == 3 && std::string(tail) != "im"))
        fail(ErrorKind::InvalidArgument, "component must be 'kobayashi', 'indicatrix' or 'wu:i,j[:im]' (got '" + s + "')");
    c.i = i;
    c.j = j;
    c.imaginary = got == 3;
    return c;
}

ComponentSelector default_component(const DomainParams& d, Seam s) {
    ComponentSelector c;
    if (s == Seam::Junction) {
        c.kind = ComponentSelector::Kind::IndicatrixY;
    } else if (s == Seam::Z && d.m() > 1.0) {
        // the Wu tensor is analytic across Z for m > 1; the |z1|^{2m} term lives in K
        c.kind = ComponentSelector::Kind::KobayashiSquared;
    } else if (s == Seam::Z) {
        c.i = 2;
        c.j = 2;
    }
    return c;
}

namespace {

struct Probe {
    std::string name;
    ScalarPath f;
    ScalarPath control;
};

Probe make_probe(const DomainParams& d, Seam seam, const ComponentSelector& c, Rng& rng, int index,
                 const RegularityOptions& opt) {
    Probe p;
    const int n = d.n();
    const double off = opt.probe.control_offset;
    if (seam == Seam::Junction) {
        if (d.m() == 0.5) fail(ErrorKind::Unsupported, "the indicatrix joint is degenerate at m = 1/2");
        const double p1 = opt.junction_p1;
        const double xj = joining_point_derivatives(d, p1).x_join;
        const DomainParams dd = d;
        p.f = [dd, p1, xj](double t) { return indicatrix_y(dd, p1, xj + t); };
        p.control = [dd, p1, xj, off](double t) { return indicatrix_y(dd, p1, xj - off + t); };
        std::ostringstream os;
        os << "junction p1=" << p1 << " x=" << xj << "+t";
        p.name = os.str();
        return p;
    }
    if (n < 2) fail(ErrorKind::InvalidArgument, "dimension too small");
    const cplx phase = rng.unit_phase();
    CVector base(n);
    double shift;  // control offset direction in t
    if (seam == Seam::Z) {
        const CVector dir = random_direction(n - 1, rng).v;
        base(0) = 0.0;
        base.tail(n - 1) = dir * rng.uniform(0.0, 0.3);
        shift = off;
    } else {
        if (!d.has_m0_seam()) fail(ErrorKind::Configuration, "M0 is a seam only for m > 1");
        const CVector dir = random_direction(n - 1, rng).v;
        const double rho = index == 0 ? 0.0 : rng.uniform(0.1, 0.6);
        base.tail(n - 1) = dir * rho;
        base(0) = std::pow(0.5 * (1.0 - rho * rho), 1.0 / (2.0 * d.m()));
        shift = -off;
    }
    const double r0 = std::abs(base(0));
    auto point = [base, phase, r0](double t) {
        CVector z = base;
        z(0) = (r0 + t) * phase;
        return PointCoords(z);
    };
    ScalarPath value;
    const DomainParams dd = d;
    if (c.kind == ComponentSelector::Kind::KobayashiSquared) {
        CVector v = CVector::Zero(n);
        if (n == 2) {
            v(1) = 1.0;
        } else {
            // unit vector in the zhat slice orthogonal to the base point's zhat
            const CVector bh = base.tail(n - 1);
            CVector w = random_direction(n - 1, rng).v;
            if (bh.norm() > 0.0) w -= bh * (bh.dot(w) / bh.squaredNorm());
            v.tail(n - 1) = w / w.norm();
        }
        value = [dd, point, v](double t) { return kobayashi(dd, point(t), TangentVector(v)).squared; };
    } else if (c.kind == ComponentSelector::Kind::WuEntry) {
        if (c.i > n || c.j > n) fail(ErrorKind::InvalidArgument, "component index exceeds the dimension");
        const int i = c.i - 1, j = c.j - 1;
        const bool im = c.imaginary;
        value = [dd, point, i, j, im](double t) {
            const cplx h = wu_matrix(dd, point(t))(i, j);
            return im ? h.imag() : h.real();
        };
    } else {
        fail(ErrorKind::InvalidArgument, "the indicatrix component applies only to the JUNCTION seam");
    }
    p.f = value;
    p.control = [value, shift](double t) { return value(t + shift); };
    std::ostringstream os;
    os.precision(6);
    os << seam_name(seam) << " base=(";
    for (int k = 0; k < n; ++k) os << (k ? "," : "") << base(k).real() << (base(k).imag() >= 0 ? "+" : "") << base(k).imag() << "i";
    os << ") dir=e1*" << std::arg(phase);
    p.name = os.str();
    return p;
}

}  // namespace

std::vector<SmoothnessReport> regularity_scan(const DomainParams& d, Seam seam, const ComponentSelector& c,
                                              std::uint64_t seed, const RegularityOptions& opt, int threads) {
    if (opt.paths < 1) fail(ErrorKind::InvalidArgument, "regularity scan needs at least one path");
    if (opt.max_order < 0 || opt.max_order > 4) fail(ErrorKind::InvalidArgument, "max order must lie in [0, 4]");
    if (seam == Seam::Z && !d.thin_set_is_seam())
        fail(ErrorKind::Configuration, "Z is not a seam for m = 1 (the ball)");
    Rng rng(seed);
    const int paths = seam == Seam::Junction ? 1 : opt.paths;
    std::vector<Probe> probes;
    for (int k = 0; k < paths; ++k) probes.push_back(make_probe(d, seam, c, rng, k, opt));
    const int orders = opt.max_order + 1;
    std::vector<SmoothnessReport> out(probes.size() * orders);
    parallel_for(out.size(), worker_count(threads), [&](std::size_t idx) {
        const Probe& p = probes[idx / orders];
        const int order = static_cast<int>(idx % orders);
        ProbeOptions po = opt.probe;
        SmoothnessReport r = holder_exponent(p.f, order, p.control, po);
        r.path = p.name;
        r.component = c.str();
        out[idx] = r;
    });
    return out;
}

RegularityClass classify_regularity(const std::vector<SmoothnessReport>& reports) {
    std::vector<SmoothnessReport> rs = reports;
    std::sort(rs.begin(), rs.end(), [](const SmoothnessReport& a, const SmoothnessReport& b) { return a.order < b.order; });
    RegularityClass c;
    char buf[96];
    for (const SmoothnessReport& r : rs) {
        if (r.verdict == SmoothnessVerdict::Inconclusive) {
            c.inconclusive = true;
            std::snprintf(buf, sizeof buf, "inconclusive at order %d", r.order);
            c.label = buf;
            return c;
        }
        if (r.verdict == SmoothnessVerdict::Holder) {
            c.continuous_order = r.order;
            c.exponent = r.exponent;
            std::snprintf(buf, sizeof buf, "C^{%d,%.2f}", r.order, r.exponent);
            c.label = buf;
            return c;
        }
        if (r.verdict == SmoothnessVerdict::Kink) {
            c.continuous_order = r.order;
            c.exponent = 1.0;
            std::snprintf(buf, sizeof buf, "C^{%d,1} with a jump in derivative %d", r.order, r.order + 1);
            c.label = buf;
            return c;
        }
    }
    std::snprintf(buf, sizeof buf, "no non-smoothness through order %d", rs.empty() ? 0 : rs.back().order + 1);
    c.label = buf;
    return c;
}

}  // namespace egg
