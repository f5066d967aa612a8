#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "common.h"
#include "verify.h"
#include "zerocross.h"

namespace {

using namespace zxcli;

constexpr double kPi = 3.14159265358979323846;

std::string slug(std::string text) {
    for (char& c : text)
        if (c == ':' || c == '=' || c == ',') c = '-';
    return text;
}

std::string join_values(const std::vector<double>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += format_full(values[i]);
    }
    return out;
}

std::string output_path(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / name).string();
}

void validate_format(const std::string& format) {
    if (format != "csv" && format != "json")
        throw CommandError(kExitBadConfig, "format must be csv or json, got '" + format + "'");
}

std::string describe(const Profile& profile) {
    char buffer[64];
    check(zx_profile_describe(profile.get(), buffer, sizeof buffer), "profile");
    return buffer;
}

// ---- sweep-phase ----------------------------------------------------------

struct SweepOptions {
    std::string profile = "power:n=2";
    std::string G = "1000";
    std::string T = "1";
    int K = 360;
    std::string out = ".";
    std::string format = "csv";
    int jobs = 0;
};

void run_sweep_phase(const SweepOptions& opt) {
    validate_format(opt.format);
    auto Gs = parse_values(opt.G);
    auto Ts = parse_values(opt.T);
    Profile profile(opt.profile);
    std::string spec = describe(profile);
    int jobs = resolve_jobs(opt.jobs);

    std::string canonical = "sweep-phase profile=" + spec + " G=" + join_values(Gs) +
                            " T=" + join_values(Ts) + " K=" + std::to_string(opt.K) +
                            " format=" + opt.format;
    std::string hash = hash_hex(fnv1a(canonical));

    ArtifactSet files;
    std::vector<double> samples(static_cast<size_t>(opt.K));
    for (double G : Gs) {
        for (double T : Ts) {
            check(zx_phase_ensemble(profile.get(), G, T, opt.K, nullptr, jobs, nullptr, nullptr,
                                    nullptr, samples.data()),
                  "sweep-phase at G=" + format_short(G) + " T=" + format_short(T));
            Table table("sweep-phase", hash, {"phi", "R"});
            for (int k = 0; k < opt.K; ++k)
                table.row({2.0 * kPi * k / opt.K, samples[static_cast<size_t>(k)]});
            std::string name = "sweep_phase_" + slug(spec) + "_G" + format_short(G) + "_T" +
                               format_short(T) + "." + opt.format;
            std::string path = output_path(opt.out, name);
            files.write_file(path, table.render(opt.format));
            std::printf("wrote %s\n", path.c_str());
        }
    }
    files.commit();
}

// ---- mean-vs-n -------------------------------------------------------------

struct MeanOptions {
    std::string family = "power";
    double a = 5.0;
    std::string n = "0.5,1,2,4";
    double G = 1000.0;
    int K = 360;
    std::string out = ".";
    std::string format = "csv";
    int jobs = 0;
};

void run_mean_vs_n(const MeanOptions& opt) {
    validate_format(opt.format);
    if (opt.family != "power" && opt.family != "tanh")
        throw CommandError(kExitBadConfig,
                           "profile family must be power or tanh, got '" + opt.family + "'");
    auto ns = parse_values(opt.n);
    for (double n : ns)
        if (!(n > 0.0 && n <= 10.0))
            throw CommandError(kExitBadConfig,
                               "n must lie in (0, 10], got " + format_short(n));
    int jobs = resolve_jobs(opt.jobs);

    std::string canonical = "mean-vs-n profile=" + opt.family +
                            (opt.family == "tanh" ? " a=" + format_full(opt.a) : "") +
                            " n=" + join_values(ns) + " G=" + format_full(opt.G) +
                            " K=" + std::to_string(opt.K) + " format=" + opt.format;
    std::string hash = hash_hex(fnv1a(canonical));

    Table table("mean-vs-n", hash, {"n", "mean_R", "beta_analytic"});
    for (double n : ns) {
        std::string spec = opt.family == "power"
                               ? "power:n=" + format_full(n)
                               : "tanh:n=" + format_full(n) + ",a=" + format_full(opt.a);
        Profile profile(spec);
        double mean = 0.0;
        check(zx_phase_ensemble(profile.get(), opt.G, 1.0, opt.K, nullptr, jobs, &mean, nullptr,
                                nullptr, nullptr),
              "mean-vs-n at n=" + format_short(n));
        double beta = 0.0;
        check(zx_beta_single(n, &beta), "beta at n=" + format_short(n));
        table.row({n, mean, beta});
    }

    ArtifactSet files;
    std::string name =
        "mean_vs_n_" + opt.family + "_G" + format_short(opt.G) + "." + opt.format;
    std::string path = output_path(opt.out, name);
    files.write_file(path, table.render(opt.format));
    std::printf("wrote %s\n", path.c_str());
    files.commit();
}

// ---- energy-curve ----------------------------------------------------------

struct CurveOptions {
    double n = 2.0;
    std::string g = "0.1,1,10";
    std::string b = "-1:1:lin,801";
    std::string out = ".";
    std::string format = "csv";
};

void run_energy_curve(const CurveOptions& opt) {
    validate_format(opt.format);
    auto gs = parse_values(opt.g);
    auto bs = parse_values(opt.b);

    std::string canonical = "energy-curve n=" + format_full(opt.n) + " g=" + join_values(gs) +
                            " b=" + join_values(bs) + " format=" + opt.format;
    std::string hash = hash_hex(fnv1a(canonical));

    ArtifactSet files;
    for (double g : gs) {
        // g = 2 G nu with nu = 1/(n+2), so G = g (n+2) / 2.
        double G = g * (opt.n + 2.0) / 2.0;
        Table table("energy-curve", hash, {"b", "R"});
        for (double b : bs) {
            double R = 0.0;
            check(zx_energy_ratio_curve(opt.n, G, b, &R),
                  "energy-curve at g=" + format_short(g) + " b=" + format_short(b));
            table.row({b, R});
        }
        std::string name = "energy_curve_n" + format_short(opt.n) + "_g" + format_short(g) +
                           "." + opt.format;
        std::string path = output_path(opt.out, name);
        files.write_file(path, table.render(opt.format));
        std::printf("wrote %s\n", path.c_str());
    }
    files.commit();
}

// ---- rho-g -----------------------------------------------------------------

struct RhoOptions {
    double nu = 0.25;
    std::string g = "1:1000:log";
    std::string out = ".";
    std::string format = "csv";
};

void run_rho_g(const RhoOptions& opt) {
    validate_format(opt.format);
    auto gs = parse_values(opt.g);

    std::string canonical =
        "rho-g nu=" + format_full(opt.nu) + " g=" + join_values(gs) + " format=" + opt.format;
    std::string hash = hash_hex(fnv1a(canonical));

    Table table("rho-g", hash, {"g", "rho"});
    for (double g : gs) {
        double rho = 0.0;
        check(zx_rho_of_g(opt.nu, g, &rho), "rho at g=" + format_short(g));
        table.row({g, rho});
    }

    ArtifactSet files;
    std::string name = "rho_g_nu" + format_short(opt.nu) + "." + opt.format;
    std::string path = output_path(opt.out, name);
    files.write_file(path, table.render(opt.format));
    std::printf("wrote %s\n", path.c_str());
    files.commit();
}

// ---- fock-dist --------------------------------------------------------------

struct FockOptions {
    long N = 0;
    double u_minus = 1.0;
    double tail_bound = 1e-10;
    std::string out = ".";
    std::string format = "csv";
};

void run_fock_dist(const FockOptions& opt) {
    validate_format(opt.format);
    if (opt.N < 0) throw CommandError(kExitBadConfig, "N must be nonnegative");
    if (!(opt.u_minus >= 0.0) || !std::isfinite(opt.u_minus))
        throw CommandError(kExitBadConfig, "u-minus must be a finite nonnegative number");

    // Probabilities depend on the pair only through |u-|, so the canonical
    // representative with real positive entries is used.
    zx_pair pair{std::sqrt(1.0 + opt.u_minus * opt.u_minus), 0.0, opt.u_minus, 0.0};

    std::string canonical = "fock-dist N=" + std::to_string(opt.N) +
                            " u_minus=" + format_full(opt.u_minus) +
                            " tail_bound=" + format_full(opt.tail_bound) +
                            " format=" + opt.format;
    std::string hash = hash_hex(fnv1a(canonical));

    zx_fock_distribution* raw = nullptr;
    check(zx_fock_distribution_create(opt.N, &pair, opt.tail_bound, &raw), "fock-dist");
    std::unique_ptr<zx_fock_distribution, decltype(&zx_fock_distribution_free)> dist(
        raw, &zx_fock_distribution_free);

    Table table("fock-dist", hash, {"M", "p"});
    size_t count = zx_fock_distribution_size(dist.get());
    long double mean = 0.0L;
    long double second = 0.0L;
    for (size_t i = 0; i < count; ++i) {
        long level = 0;
        double p = 0.0;
        check(zx_fock_distribution_at(dist.get(), i, &level, &p), "fock-dist row");
        table.row({static_cast<double>(level), p});
        mean += static_cast<long double>(level) * p;
        second += static_cast<long double>(level) * static_cast<long double>(level) * p;
    }
    double mean_level = static_cast<double>(mean);
    double level_variance = static_cast<double>(second - mean * mean);

    double beta = 0.0;
    check(zx_beta_of(&pair, &beta), "fock-dist beta");

    nlohmann::ordered_json summary;
    summary["zerocross"] = zx_version();
    summary["subcommand"] = "fock-dist";
    summary["config_hash"] = hash;
    summary["initial_n"] = opt.N;
    summary["u_minus"] = opt.u_minus;
    summary["beta"] = beta;
    summary["levels"] = count;
    summary["tail_mass"] = zx_fock_distribution_tail(dist.get());
    summary["mean_level"] = mean_level;
    summary["level_variance"] = level_variance;
    double q = 0.0;
    zx_status q_status = zx_mandel_q(opt.N, &pair, &q);
    if (q_status == ZX_OK)
        summary["mandel_q"] = q;
    else if (q_status == ZX_ERR_DOMAIN)
        summary["mandel_q"] = nullptr;  // vacuum through an adiabatic pair: no photons
    else
        check(q_status, "fock-dist Mandel Q");

    ArtifactSet files;
    std::string stem = "fock_dist_N" + std::to_string(opt.N) + "_u" + format_short(opt.u_minus);
    std::string path = output_path(opt.out, stem + "." + opt.format);
    files.write_file(path, table.render(opt.format));
    std::printf("wrote %s\n", path.c_str());
    std::string summary_path = output_path(opt.out, stem + "_summary.json");
    files.write_file(summary_path, summary.dump(2) + "\n");
    std::printf("wrote %s\n", summary_path.c_str());
    files.commit();
}

// ---- double-cross ------------------------------------------------------------

struct DoubleOptions {
    double n = 2.0;
    long scan = 10000;
    std::string out = ".";
    std::string format = "csv";
};

void run_double_cross(const DoubleOptions& opt) {
    validate_format(opt.format);
    if (opt.scan < 4 || opt.scan > 100'000'000)
        throw CommandError(kExitBadConfig, "phi-scan count must lie in [4, 1e8]");

    zx_pair u{};
    check(zx_u_pair_single(opt.n, &u), "double-cross pair");

    std::string canonical = "double-cross n=" + format_full(opt.n) +
                            " phi-scan=" + std::to_string(opt.scan) + " format=" + opt.format;
    std::string hash = hash_hex(fnv1a(canonical));

    // beta of the composition depends on Phi through exp(2 i Phi); one period.
    Table table("double-cross", hash, {"Phi", "beta"});
    double seen_min = 0.0;
    double seen_max = 0.0;
    for (long k = 0; k < opt.scan; ++k) {
        double Phi = kPi * static_cast<double>(k) / static_cast<double>(opt.scan);
        zx_pair composed{};
        check(zx_compose_two(&u, &u, Phi, &composed), "double-cross compose");
        double beta = 0.0;
        check(zx_beta_of(&composed, &beta), "double-cross beta");
        table.row({Phi, beta});
        if (k == 0) {
            seen_min = seen_max = beta;
        } else {
            seen_min = std::min(seen_min, beta);
            seen_max = std::max(seen_max, beta);
        }
    }
    double bound_min = 0.0;
    double bound_max = 0.0;
    check(zx_beta_extremes(&u, &u, &bound_min, &bound_max), "double-cross extremes");

    ArtifactSet files;
    std::string name = "double_cross_n" + format_short(opt.n) + "_scan" +
                       std::to_string(opt.scan) + "." + opt.format;
    std::string path = output_path(opt.out, name);
    files.write_file(path, table.render(opt.format));
    std::printf("wrote %s\n", path.c_str());
    std::printf("beta range scanned [%s, %s], attainable [%s, %s]\n",
                format_full(seen_min).c_str(), format_full(seen_max).c_str(),
                format_full(bound_min).c_str(), format_full(bound_max).c_str());
    files.commit();
}

// ---- specfun-check ------------------------------------------------------------

struct SpecfunOptions {
    double switchover = 0.0;  // fault injection; 0 leaves the default alone
};

void run_specfun_check(const SpecfunOptions& opt) {
    if (opt.switchover != 0.0) zx_set_bessel_switchover(opt.switchover);

    std::vector<IdentityRow> rows;
    try {
        specfun_identity_rows(rows);
    } catch (...) {
        zx_set_bessel_switchover(0.0);
        throw;
    }
    zx_set_bessel_switchover(0.0);

    std::string canonical =
        "specfun-check switchover=" + format_full(opt.switchover);
    std::printf("# zerocross %s specfun-check %s\n", zx_version(),
                hash_hex(fnv1a(canonical)).c_str());
    std::printf("check,point,residual,threshold\n");
    bool ok = true;
    for (const auto& row : rows) {
        std::printf("%s,%s,%s,%s\n", row.name.c_str(), row.point.c_str(),
                    format_full(row.residual).c_str(), format_full(row.threshold).c_str());
        if (!(row.residual <= row.threshold)) ok = false;
    }
    if (!ok) throw CommandError(kExitVerifyFailure, "specfun identity residuals out of bounds");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "zerocross: oscillator energy amplification through zero-frequency crossings.\n"
        "Numeric lists accept explicit values 'a,b,c' or ranges 'lo:hi:log[,count]' /\n"
        "'lo:hi:lin[,count]'. Every CSV starts with '# zerocross <version> <subcommand>\n"
        "<config-hash>'; reruns with the same configuration are byte-identical."};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(zx_version()));

    auto sweep = std::make_shared<SweepOptions>();
    auto* sweep_cmd = app.add_subcommand(
        "sweep-phase", "Energy ratio R over the initial-phase grid, one file per (G, T)");
    sweep_cmd->add_option("--profile", sweep->profile, "profile spec, e.g. power:n=2 or sin2")
        ->capture_default_str();
    sweep_cmd->add_option("--G", sweep->G, "adiabaticity values")->capture_default_str();
    sweep_cmd->add_option("--T", sweep->T, "sample times")->capture_default_str();
    sweep_cmd->add_option("--K", sweep->K, "phase samples per sweep (>= 8)")
        ->capture_default_str()
        ->check(CLI::Range(8, 10'000'000));
    sweep_cmd->add_option("--out", sweep->out, "output directory")->capture_default_str();
    sweep_cmd->add_option("--format", sweep->format, "csv or json")->capture_default_str();
    sweep_cmd->add_option("--jobs", sweep->jobs,
                          "worker threads (default: machine parallelism; env ZEROCROSS_JOBS wins)");
    sweep_cmd->callback([sweep] { run_sweep_phase(*sweep); });

    auto mean = std::make_shared<MeanOptions>();
    auto* mean_cmd = app.add_subcommand(
        "mean-vs-n", "Phase-averaged amplification after one crossing against the power index");
    mean_cmd->add_option("--profile", mean->family, "profile family: power or tanh")
        ->capture_default_str();
    mean_cmd->add_option("--a", mean->a, "tanh steepness (tanh family only)")
        ->capture_default_str();
    mean_cmd->add_option("--n", mean->n, "power indices in (0, 10]")->capture_default_str();
    mean_cmd->add_option("--G", mean->G, "adiabaticity")->capture_default_str();
    mean_cmd->add_option("--K", mean->K, "phase samples (>= 8)")
        ->capture_default_str()
        ->check(CLI::Range(8, 10'000'000));
    mean_cmd->add_option("--out", mean->out, "output directory")->capture_default_str();
    mean_cmd->add_option("--format", mean->format, "csv or json")->capture_default_str();
    mean_cmd->add_option("--jobs", mean->jobs, "worker threads");
    mean_cmd->callback([mean] { run_mean_vs_n(*mean); });

    auto curve = std::make_shared<CurveOptions>();
    auto* curve_cmd = app.add_subcommand(
        "energy-curve", "Closed-form energy ratio R(b) across the crossing, one file per g");
    curve_cmd->add_option("--n", curve->n, "power index")->capture_default_str();
    curve_cmd->add_option("--g", curve->g, "accumulated-phase values")->capture_default_str();
    curve_cmd->add_option("--b", curve->b, "dimensionless times in [-1, 1]")
        ->capture_default_str();
    curve_cmd->add_option("--out", curve->out, "output directory")->capture_default_str();
    curve_cmd->add_option("--format", curve->format, "csv or json")->capture_default_str();
    curve_cmd->callback([curve] { run_energy_curve(*curve); });

    auto rho = std::make_shared<RhoOptions>();
    auto* rho_cmd = app.add_subcommand(
        "rho-g", "Phase-averaged amplification at first passage against the accumulated phase g");
    rho_cmd->add_option("--nu", rho->nu, "Bessel order nu = 1/(n+2), in (0, 1/2)")
        ->capture_default_str();
    rho_cmd->add_option("--g", rho->g, "accumulated-phase values")->capture_default_str();
    rho_cmd->add_option("--out", rho->out, "output directory")->capture_default_str();
    rho_cmd->add_option("--format", rho->format, "csv or json")->capture_default_str();
    rho_cmd->callback([rho] { run_rho_g(*rho); });

    auto fock = std::make_shared<FockOptions>();
    auto* fock_cmd = app.add_subcommand(
        "fock-dist", "Final Fock-level distribution for an initial level, with summary JSON");
    fock_cmd->add_option("--N", fock->N, "initial Fock level")->capture_default_str();
    fock_cmd
        ->add_option("--u-minus", fock->u_minus,
                     "|u-| of the crossing (probabilities depend on the pair only through it)")
        ->capture_default_str();
    fock_cmd->add_option("--tail-bound", fock->tail_bound, "enumeration tail bound, in (0, 1e-6]")
        ->capture_default_str();
    fock_cmd->add_option("--out", fock->out, "output directory")->capture_default_str();
    fock_cmd->add_option("--format", fock->format, "csv or json")->capture_default_str();
    fock_cmd->callback([fock] { run_fock_dist(*fock); });

    auto dbl = std::make_shared<DoubleOptions>();
    auto* dbl_cmd = app.add_subcommand(
        "double-cross", "Amplification of two equal crossings against the inter-crossing phase");
    dbl_cmd->add_option("--n", dbl->n, "power index of each crossing")->capture_default_str();
    dbl_cmd->add_option("--phi-scan", dbl->scan, "number of Phi samples over one period")
        ->capture_default_str();
    dbl_cmd->add_option("--out", dbl->out, "output directory")->capture_default_str();
    dbl_cmd->add_option("--format", dbl->format, "csv or json")->capture_default_str();
    dbl_cmd->callback([dbl] { run_double_cross(*dbl); });

    auto spec = std::make_shared<SpecfunOptions>();
    auto* spec_cmd =
        app.add_subcommand("specfun-check", "Dump special-function identity residuals as CSV");
    spec_cmd->group("");  // diagnostic plumbing, hidden from the listing
    spec_cmd->add_option("--switchover", spec->switchover,
                         "force the Bessel branch switchover (fault injection)");
    spec_cmd->callback([spec] { run_specfun_check(*spec); });

    auto verify = std::make_shared<VerifyOptions>();
    auto* verify_cmd =
        app.add_subcommand("verify", "Run the invariant catalog and emit a JSON report");
    verify_cmd->add_option("--out", verify->out, "report file (default: stdout)");
    verify_cmd
        ->add_option("--rel-tol", verify->rel_tol,
                     "integrator tolerance for the Wronskian conservation study; values looser "
                     "than the 1e-10 contract turn that check into a warning tier")
        ->capture_default_str()
        ->check(CLI::Range(1e-14, 1e-2));
    verify_cmd->add_option("--tamper-bessel", verify->tamper_bessel,
                           "force the Bessel branch switchover (fault injection)")
        ->group("");
    verify_cmd->add_option("--jobs", verify->jobs, "worker threads");
    verify_cmd->callback([verify] { run_verify(*verify); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadConfig;
    } catch (const CommandError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    }
    return kExitOk;
}
