// egg-metrics: command-line front end over the eggmetrics C API
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "eggmetrics/eggmetrics.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerify = 3;

struct Failure {
    int code;
    std::string message;
};

int exit_code_for(egg_status s) {
    switch (s) {
        case EGG_OK: return kExitOk;
        case EGG_ERR_INVALID_ARGUMENT:
        case EGG_ERR_DOMAIN:
        case EGG_ERR_CONFIGURATION:
        case EGG_ERR_UNSUPPORTED: return kExitValidation;
        default: return kExitNumerical;
    }
}

void check(egg_status s, const char* what) {
    if (s == EGG_OK) return;
    throw Failure{exit_code_for(s), std::string(what) + ": " + egg_status_name(s) + ": " + egg_last_error()};
}

[[noreturn]] void invalid(const std::string& msg) { throw Failure{kExitValidation, msg}; }

struct DomainDeleter {
    void operator()(egg_domain* d) const { egg_domain_destroy(d); }
};
using DomainPtr = std::unique_ptr<egg_domain, DomainDeleter>;

// "re[:im],re[:im],..." with exactly n entries
std::vector<egg_complex> parse_complex_list(const std::string& text, int n, const char* what) {
    std::vector<egg_complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        egg_complex c{0.0, 0.0};
        const auto colon = item.find(':');
        try {
            std::size_t used = 0;
            const std::string re = item.substr(0, colon);
            c.re = std::stod(re, &used);
            if (used != re.size()) throw std::invalid_argument(re);
            if (colon != std::string::npos) {
                const std::string im = item.substr(colon + 1);
                c.im = std::stod(im, &used);
                if (used != im.size()) throw std::invalid_argument(im);
            }
        } catch (const std::exception&) {
            invalid(std::string("cannot parse ") + what + " entry '" + item + "'");
        }
        if (!std::isfinite(c.re) || !std::isfinite(c.im)) invalid(std::string(what) + " entries must be finite");
        out.push_back(c);
    }
    if (static_cast<int>(out.size()) != n)
        invalid(std::string(what) + " needs " + std::to_string(n) + " comma-separated entries, got " +
                std::to_string(out.size()));
    return out;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

// shortest round-trip text
std::string short_num(double v) {
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string complex_list_text(const std::vector<egg_complex>& z) {
    std::string s;
    for (std::size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + short_num(z[i].re) + ":" + short_num(z[i].im);
    return s;
}

std::string csv_field(const json& v) {
    if (v.is_number_float()) return num(v.get<double>());
    if (v.is_number()) return v.dump();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

struct RunConfig {
    double m = 0.0;
    int n = 2;
    std::uint64_t seed = 42;
    std::string format;  // empty: subcommand default
    std::string output;
    int threads = 0;
    egg_grid_spec grid{};
};

class Emitter {
public:
    Emitter(const RunConfig& cfg, std::string default_format, bool single)
        : cfg_(cfg), format_(cfg.format.empty() ? std::move(default_format) : cfg.format), single_(single) {}

    json base(const std::string& region) const {
        json r;
        r["m"] = cfg_.m;
        r["n"] = cfg_.n;
        r["region"] = region;
        r["seed"] = cfg_.seed;
        r["version"] = egg_version();
        return r;
    }

    void add(json r) { rows_.push_back(std::move(r)); }
    const std::string& format() const { return format_; }

    void write(std::ostream& os) const {
        if (format_ == "csv") {
            if (rows_.empty()) return;
            bool first = true;
            for (auto it = rows_.front().begin(); it != rows_.front().end(); ++it) {
                os << (first ? "" : ",") << it.key();
                first = false;
            }
            os << "\n";
            for (const json& r : rows_) {
                first = true;
                for (auto it = rows_.front().begin(); it != rows_.front().end(); ++it) {
                    os << (first ? "" : ",") << (r.contains(it.key()) ? csv_field(r[it.key()]) : "");
                    first = false;
                }
                os << "\n";
            }
            return;
        }
        if (single_ && rows_.size() == 1)
            os << rows_.front().dump(2) << "\n";
        else
            os << json(rows_).dump(2) << "\n";
    }

private:
    const RunConfig& cfg_;
    std::string format_;
    bool single_;
    std::vector<json> rows_;
};

void emit(const RunConfig& cfg, const Emitter& e) {
    if (cfg.output.empty()) {
        e.write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream f(cfg.output);
    if (!f) invalid("cannot open output file '" + cfg.output + "'");
    e.write(f);
    if (!f) throw Failure{kExitNumerical, "failed writing '" + cfg.output + "'"};
}

std::string region_of(egg_domain* d, const std::vector<egg_complex>& z) {
    egg_region r;
    check(egg_classify(d, z.data(), &r), "classify");
    return egg_region_name(r);
}

std::vector<egg_complex> reference_point(int n, double p1) {
    std::vector<egg_complex> z(n, egg_complex{0.0, 0.0});
    z[0].re = p1;
    return z;
}

// ---- subcommands ----

int run_region(const RunConfig& cfg, egg_domain* d, const std::string& point) {
    const auto z = parse_complex_list(point, cfg.n, "point");
    Emitter e(cfg, "json", true);
    int inside = 0;
    check(egg_contains(d, z.data(), &inside), "contains");
    json r = e.base(region_of(d, z));
    r["point"] = complex_list_text(z);
    r["inside"] = inside != 0;
    if (inside) {
        double sd = 0.0;
        check(egg_seam_distance(d, z.data(), &sd), "seam distance");
        r["seam_distance"] = sd;
    }
    e.add(r);
    emit(cfg, e);
    return kExitOk;
}

int run_eval(const RunConfig& cfg, egg_domain* d, const std::string& point, const std::string& vector) {
    const auto z = parse_complex_list(point, cfg.n, "point");
    const auto v = parse_complex_list(vector, cfg.n, "vector");
    double k = 0.0, w = 0.0;
    check(egg_kobayashi(d, z.data(), v.data(), &k), "kobayashi");
    check(egg_wu_norm(d, z.data(), v.data(), &w), "wu");
    Emitter e(cfg, "json", true);
    json r = e.base(region_of(d, z));
    r["point"] = complex_list_text(z);
    r["vector"] = complex_list_text(v);
    r["kobayashi"] = k;
    r["wu"] = w;
    r["wu_over_kobayashi"] = k > 0.0 ? w / k : 0.0;
    e.add(r);
    emit(cfg, e);
    return kExitOk;
}

int run_tensor(const RunConfig& cfg, egg_domain* d, const std::string& point, bool kahler) {
    const auto z = parse_complex_list(point, cfg.n, "point");
    const int n = cfg.n;
    std::vector<egg_complex> h(n * n), pb(n * n);
    egg_tensor_info info{};
    check(egg_wu_tensor(d, z.data(), h.data(), &info), "wu tensor");
    check(egg_pullback_tensor(d, z.data(), pb.data()), "pullback tensor");
    double diff = 0.0, scale = 0.0;
    for (int i = 0; i < n * n; ++i) {
        diff = std::max(diff, std::hypot(h[i].re - pb[i].re, h[i].im - pb[i].im));
        scale = std::max(scale, std::hypot(pb[i].re, pb[i].im));
    }
    Emitter e(cfg, "json", true);
    json r = e.base(egg_region_name(info.region));
    r["point"] = complex_list_text(z);
    r["formula"] = egg_tensor_formula_name(info.formula);
    r["origin_limit"] = info.limit != 0;
    // rows of [re, im] pairs, entry (i, j) = h_{i jbar}
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back({h[i * n + j].re, h[i * n + j].im});
        rows.push_back(row);
    }
    r["entries"] = rows;
    r["min_eig"] = info.min_eig;
    r["max_eig"] = info.max_eig;
    r["hermitian_defect"] = info.hermitian_defect;
    r["pullback_rel_diff"] = scale > 0.0 ? diff / scale : diff;
    if (kahler) {
        double kd = 0.0;
        check(egg_kahler_defect(d, z.data(), 0.0, &kd), "kahler defect");
        r["kahler_defect"] = kd;
    }
    e.add(r);
    emit(cfg, e);
    return kExitOk;
}

int run_fit(const RunConfig& cfg, egg_domain* d, double p1, bool oracle, int samples) {
    if (!(p1 > 0.0 && p1 < 1.0)) invalid("--p1 must lie in (0, 1)");
    egg_fit f{};
    check(egg_fit_reference(d, p1, &f), "fit");
    Emitter e(cfg, "json", true);
    json r = e.base(region_of(d, reference_point(cfg.n, p1)));
    r["p1"] = p1;
    r["case"] = egg_fit_case_name(f.fit_case);
    r["r1"] = f.r1;
    r["r2"] = f.r2;
    // a single contact point only in the upper-contact case; the chord touches both
    // intercepts and the lower-line fit a whole segment
    r["x_star"] = json();
    r["y_star"] = json();
    if (f.fit_case == EGG_FIT_UPPER_CONTACT) {
        double X = 0.0, x = 0.0, y = 0.0, a = 0.0;
        check(egg_solve_x(d, p1, &X), "solve X");
        check(egg_contact_point(d, p1, &x, &y, &a), "contact point");
        r["x_star"] = x;
        r["y_star"] = y;
        r["alpha_star"] = a;
        r["X"] = X;
    }
    double viol = 0.0;
    check(egg_containment_violation(d, p1, f.r1, f.r2, samples, &viol), "containment");
    r["max_containment_violation"] = viol;
    if (oracle) {
        egg_fit o{};
        check(egg_fit_oracle(d, p1, samples, &o), "oracle");
        r["oracle_r1"] = o.r1;
        r["oracle_r2"] = o.r2;
        r["oracle_rel_error"] = std::max(std::abs(o.r1 - f.r1) / f.r1, std::abs(o.r2 - f.r2) / f.r2);
    }
    e.add(r);
    emit(cfg, e);
    return kExitOk;
}

int run_kcurve(const RunConfig& cfg, egg_domain* d, double p1, int count, const std::string& branch) {
    if (!(p1 > 0.0 && p1 < 1.0)) invalid("--p1 must lie in (0, 1)");
    if (count < 2) invalid("--count must be at least 2");
    std::vector<egg_curve_branch> branches;
    if (branch == "upper" || branch == "both") branches.push_back(EGG_CURVE_UPPER);
    if (branch == "lower" || branch == "both") branches.push_back(EGG_CURVE_LOWER);
    Emitter e(cfg, "csv", false);
    const std::string region = region_of(d, reference_point(cfg.n, p1));
    for (egg_curve_branch b : branches) {
        std::vector<egg_kcurve_sample> s(count);
        check(egg_kcurve_grid(d, p1, b, count, s.data()), "kcurve");
        for (const egg_kcurve_sample& k : s) {
            json r = e.base(region);
            r["p1"] = p1;
            r["branch"] = egg_curve_branch_name(k.branch);
            r["alpha"] = k.alpha;
            r["x"] = k.x;
            r["y"] = k.y;
            e.add(r);
        }
    }
    emit(cfg, e);
    return kExitOk;
}

int run_curvature_scan(const RunConfig& cfg, egg_domain* d) {
    egg_curvature_scan* raw = nullptr;
    check(egg_curvature_scan_run(d, &cfg.grid, cfg.seed, cfg.threads, &raw), "curvature scan");
    std::unique_ptr<egg_curvature_scan, void (*)(egg_curvature_scan*)> scan(raw, egg_curvature_scan_destroy);
    Emitter e(cfg, "csv", false);
    std::vector<egg_complex> z(cfg.n);
    for (std::size_t i = 0; i < egg_curvature_scan_size(scan.get()); ++i) {
        egg_curvature_record rec{};
        check(egg_curvature_scan_record(scan.get(), i, &rec, z.data()), "curvature record");
        json r = e.base(egg_region_name(rec.region));
        r["index"] = i;
        r["point"] = complex_list_text(z);
        r["skipped"] = rec.skipped != 0;
        r["skip_reason"] = rec.skip_reason;
        r["step"] = rec.step;
        r["min_sec"] = rec.skipped ? json() : json(rec.min_sec);
        r["max_sec"] = rec.skipped ? json() : json(rec.max_sec);
        r["kahler_defect"] = rec.skipped ? json() : json(rec.kahler_defect);
        r["symmetry_defect"] = rec.skipped ? json() : json(rec.symmetry_defect);
        r["conjugate_defect"] = rec.skipped ? json() : json(rec.conjugate_defect);
        r["r11_22_minus_r21_12"] = rec.skipped ? json() : json(rec.r11_22_minus_r21_12);
        e.add(r);
    }
    emit(cfg, e);
    return kExitOk;
}

struct SmoothArgs {
    std::string seam = "Z";
    std::string component;
    int paths = 1;
    int max_order = 3;
    double junction_p1 = 0.3;
};

int run_smoothness_scan(const RunConfig& cfg, egg_domain* d, const SmoothArgs& a) {
    egg_seam seam;
    check(egg_parse_seam(a.seam.c_str(), &seam), "seam");
    egg_probe_options opt;
    egg_probe_options_default(&opt);
    opt.paths = a.paths;
    opt.max_order = a.max_order;
    opt.junction_p1 = a.junction_p1;
    egg_smoothness_scan* raw = nullptr;
    check(egg_smoothness_scan_run(d, seam, a.component.empty() ? nullptr : a.component.c_str(), cfg.seed, &opt,
                                  cfg.threads, &raw),
          "smoothness scan");
    std::unique_ptr<egg_smoothness_scan, void (*)(egg_smoothness_scan*)> scan(raw, egg_smoothness_scan_destroy);
    std::string region = seam == EGG_SEAM_Z ? "Z" : seam == EGG_SEAM_M_ZERO ? "M_ZERO" : "";
    if (region.empty()) region = region_of(d, reference_point(cfg.n, a.junction_p1));
    Emitter e(cfg, "json", false);
    const std::size_t paths = egg_smoothness_scan_paths(scan.get());
    const std::size_t per = paths ? egg_smoothness_scan_size(scan.get()) / paths : 0;
    for (std::size_t p = 0; p < paths; ++p) {
        egg_regularity cls{};
        check(egg_smoothness_scan_classify(scan.get(), p, &cls), "classify");
        for (std::size_t k = 0; k < per; ++k) {
            egg_smoothness_report rep{};
            check(egg_smoothness_scan_record(scan.get(), p * per + k, &rep), "smoothness record");
            json r = e.base(region);
            r["seam"] = egg_seam_name(seam);
            r["path_index"] = p;
            r["path"] = rep.path;
            r["component"] = rep.component;
            r["order"] = rep.order;
            r["exponent"] = rep.exponent;
            r["r_squared"] = rep.r_squared;
            r["scales_used"] = rep.scales_used;
            r["below_noise"] = rep.below_noise != 0;
            r["step_min"] = rep.step_min;
            r["step_max"] = rep.step_max;
            r["jump"] = rep.jump;
            r["jump_error"] = rep.jump_error;
            r["noise"] = rep.noise;
            r["jump_detected"] = rep.jump_detected != 0;
            r["verdict"] = egg_verdict_name(rep.verdict);
            r["path_class"] = cls.label;
            e.add(r);
        }
    }
    emit(cfg, e);
    return kExitOk;
}

int run_verify(const RunConfig& cfg, egg_domain* d) {
    egg_verify* raw = nullptr;
    check(egg_verify_run(d, cfg.seed, cfg.threads, &raw), "verify");
    std::unique_ptr<egg_verify, void (*)(egg_verify*)> v(raw, egg_verify_destroy);
    bool all = true;
    std::vector<egg_check> checks(egg_verify_size(v.get()));
    for (std::size_t i = 0; i < checks.size(); ++i) {
        check(egg_verify_record(v.get(), i, &checks[i]), "verify record");
        all = all && checks[i].passed;
    }
    if (cfg.format.empty() || cfg.format == "table") {
        std::ostringstream os;
        char buf[96];
        os << "egg-metrics " << egg_version() << " verify m=" << cfg.m << " n=" << cfg.n << " seed=" << cfg.seed
           << "\n";
        int passed = 0;
        for (const egg_check& c : checks) {
            std::snprintf(buf, sizeof buf, "%-4s  measured %-11.3e threshold %-9.1e  ", c.passed ? "PASS" : "FAIL",
                          c.measured, c.threshold);
            os << buf << c.name << "\n      " << c.detail << "\n";
            passed += c.passed;
        }
        os << passed << "/" << checks.size() << " checks passed\n";
        if (cfg.output.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream f(cfg.output);
            if (!f) invalid("cannot open output file '" + cfg.output + "'");
            f << os.str();
        }
    } else {
        Emitter e(cfg, "json", false);
        for (const egg_check& c : checks) {
            json r = e.base("ALL");
            r["check"] = c.name;
            r["passed"] = c.passed != 0;
            r["measured"] = c.measured;
            r["threshold"] = c.threshold;
            r["detail"] = c.detail;
            e.add(r);
        }
        emit(cfg, e);
    }
    return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kobayashi and Wu metrics on egg domains |z1|^{2m} + |zhat|^2 < 1", "egg-metrics"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(egg_version()));
    app.set_config("--config", "", "key = value file mirroring the common flags (flags win)");

    RunConfig cfg;
    egg_grid_spec_default(&cfg.grid);
    app.add_option("--m", cfg.m, "exponent m (>= 1/2)")->required();
    app.add_option("--n", cfg.n, "complex dimension (2..64)")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for every random sample")->capture_default_str();
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    app.add_option("--threads", cfg.threads, "worker threads (default: EGG_METRICS_THREADS or hardware)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--z1-min", cfg.grid.z1_min, "curvature grid: smallest |z1|")->capture_default_str();
    app.add_option("--z1-max", cfg.grid.z1_max, "curvature grid: largest |z1|")->capture_default_str();
    app.add_option("--z1-count", cfg.grid.z1_count, "curvature grid: |z1| values")->capture_default_str();
    app.add_option("--zhat-min", cfg.grid.zhat_min, "curvature grid: smallest |zhat| fraction")->capture_default_str();
    app.add_option("--zhat-max", cfg.grid.zhat_max, "curvature grid: largest |zhat| fraction")->capture_default_str();
    app.add_option("--zhat-count", cfg.grid.zhat_count, "curvature grid: |zhat| values")->capture_default_str();
    app.add_option("--step", cfg.grid.step, "curvature differencing step")->capture_default_str();

    std::string point, vector;
    auto* region = app.add_subcommand("region", "classify a point");
    region->add_option("--point", point, "re[:im],... (n entries)")->required();

    auto* eval = app.add_subcommand("eval", "Kobayashi and Wu norms of a tangent vector");
    eval->add_option("--point", point, "re[:im],... (n entries)")->required();
    eval->add_option("--vector", vector, "re[:im],... (n entries)")->required();

    bool kahler = false;
    auto* tensor = app.add_subcommand("tensor", "Wu tensor at a point");
    tensor->add_option("--point", point, "re[:im],... (n entries)")->required();
    tensor->add_flag("--kahler", kahler, "also report the Kahler defect");

    double p1 = 0.5;
    bool oracle = false;
    int samples = 4096;
    auto* fit = app.add_subcommand("fit", "ellipsoid fit at the reference point (p1, 0)");
    fit->add_option("--p1", p1, "reference coordinate in (0, 1)")->capture_default_str();
    fit->add_flag("--oracle", oracle, "also run the numerical oracle");
    fit->add_option("--samples", samples, "oracle / containment samples")->capture_default_str()->check(CLI::PositiveNumber);

    int count = 200;
    std::string branch = "both";
    auto* kcurve = app.add_subcommand("kcurve", "indicatrix K-curve samples in square coordinates");
    kcurve->add_option("--p1", p1, "reference coordinate in (0, 1)")->capture_default_str();
    kcurve->add_option("--count", count, "samples per branch")->capture_default_str();
    kcurve->add_option("--branch", branch, "upper, lower or both")
        ->capture_default_str()
        ->check(CLI::IsMember({"upper", "lower", "both"}));

    auto* curv = app.add_subcommand("curvature-scan", "holomorphic sectional curvature over a seeded grid");

    SmoothArgs sm;
    auto* smooth = app.add_subcommand("smoothness-scan", "regularity probes across a seam");
    smooth->add_option("--seam", sm.seam, "Z, M0 or JUNCTION")->capture_default_str();
    smooth->add_option("--component", sm.component, "wu:i,j[:im], kobayashi or indicatrix (default per seam)");
    smooth->add_option("--paths", sm.paths, "probe paths")->capture_default_str()->check(CLI::PositiveNumber);
    smooth->add_option("--max-order", sm.max_order, "highest derivative order probed")
        ->capture_default_str()
        ->check(CLI::Range(0, 4));
    smooth->add_option("--junction-p1", sm.junction_p1, "reference coordinate for the JUNCTION seam")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the acceptance checks for (m, n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitValidation;
    }

    try {
        if (cfg.format == "table" && !verify->parsed()) invalid("--format table applies to verify only");
        egg_domain* raw = nullptr;
        check(egg_domain_create(cfg.m, cfg.n, &raw), "domain");
        DomainPtr d(raw);
        if (region->parsed()) return run_region(cfg, d.get(), point);
        if (eval->parsed()) return run_eval(cfg, d.get(), point, vector);
        if (tensor->parsed()) return run_tensor(cfg, d.get(), point, kahler);
        if (fit->parsed()) return run_fit(cfg, d.get(), p1, oracle, samples);
        if (kcurve->parsed()) return run_kcurve(cfg, d.get(), p1, count, branch);
        if (curv->parsed()) return run_curvature_scan(cfg, d.get());
        if (smooth->parsed()) return run_smoothness_scan(cfg, d.get(), sm);
        if (verify->parsed()) return run_verify(cfg, d.get());
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitValidation;
}
