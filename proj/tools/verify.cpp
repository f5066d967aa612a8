#include "verify.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "common.h"
#include "zerocross.h"

namespace {

using namespace zxcli;
using nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;
constexpr double kContractRelTol = 1e-10;

struct Env {
    double rel_tol;
    bool loosened;  // rel_tol above the 1e-10 contract
    int jobs;
};

struct CheckResult {
    double residual = 0.0;
    double threshold = 0.0;
    std::string tier;  // derived from residual vs threshold when left empty
    std::string detail;
    ordered_json extra;
};

// For checks the exit-code contract does not care about individually: any
// API failure inside a check body becomes a fail entry for that check.
void api(zx_status status, const char* what) {
    if (status != ZX_OK)
        throw std::runtime_error(std::string(what) + ": " + zx_last_error());
}

std::complex<double> ceps(const zx_mode_state& m) { return {m.eps_re, m.eps_im}; }
std::complex<double> cup(const zx_pair& p) { return {p.u_plus_re, p.u_plus_im}; }
std::complex<double> cum(const zx_pair& p) { return {p.u_minus_re, p.u_minus_im}; }

std::vector<double> grid(double lo, double hi, int count) {
    std::vector<double> out(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        out[static_cast<size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    out.back() = hi;
    return out;
}

double profile_value(const Profile& p, double T) {
    double f = 0.0;
    api(zx_profile_value(p.get(), T, &f), "profile value");
    return f;
}

double phase_integral(const Profile& p, double G, double a, double b) {
    double out = 0.0;
    api(zx_phase_integral(p.get(), G, a, b, &out), "phase integral");
    return out;
}

struct Ensemble {
    double mean, min, max;
    std::vector<double> samples;
};

Ensemble ensemble(const Profile& p, double G, double T, int K, int jobs) {
    Ensemble e;
    e.samples.resize(static_cast<size_t>(K));
    api(zx_phase_ensemble(p.get(), G, T, K, nullptr, jobs, &e.mean, &e.min, &e.max,
                          e.samples.data()),
        "phase ensemble");
    return e;
}

std::vector<zx_mode_state> integrate_mode(const Profile& p, double G,
                                          const std::vector<double>& times) {
    std::vector<zx_mode_state> states(times.size());
    api(zx_integrate_mode(p.get(), G, times.data(), times.size(), nullptr, states.data()),
        "mode integration");
    return states;
}

std::vector<zx_classical_state> integrate_classical(const Profile& p, double G, double phi,
                                                    const std::vector<double>& times) {
    std::vector<zx_classical_state> states(times.size());
    api(zx_integrate_classical(p.get(), G, phi, times.data(), times.size(), nullptr,
                               states.data()),
        "classical integration");
    return states;
}

zx_pair pair_from_um(std::complex<double> um, double phase_up = 0.0) {
    std::complex<double> up = std::polar(std::sqrt(1.0 + std::norm(um)), phase_up);
    return {up.real(), up.imag(), um.real(), um.imag()};
}

// ---- profiles ---------------------------------------------------------------

CheckResult check_power_even(const Env&) {
    CheckResult r;
    for (double n : {0.5, 1.0, 2.0, 4.0}) {
        Profile p("power:n=" + format_full(n));
        for (int i = 0; i <= 100; ++i) {
            double T = i / 100.0;
            r.residual = std::max(r.residual,
                                  std::fabs(profile_value(p, T) - profile_value(p, -T)));
        }
    }
    r.threshold = 0.0;
    r.detail = "f(T) = f(-T) bitwise for power profiles";
    return r;
}

CheckResult check_phase_additivity(const Env&) {
    CheckResult r;
    r.threshold = 1e-10;
    const std::pair<const char*, double> configs[] = {
        {"power:n=2", 1000.0}, {"sin2", 997.0}, {"tanh:n=1,a=5", 250.0}};
    for (const auto& [spec, G] : configs) {
        Profile p(spec);
        double whole = phase_integral(p, G, -1.0, 1.0);
        double split = phase_integral(p, G, -1.0, 0.37) + phase_integral(p, G, 0.37, 1.0);
        r.residual = std::max(r.residual, std::fabs(whole - split) / std::fabs(whole));
    }
    r.detail = "integral over [-1,1] vs split at 0.37";
    return r;
}

CheckResult check_phase_closed_form(const Env&) {
    CheckResult r;
    r.threshold = 1e-10;
    for (double n : {0.5, 1.0, 2.0, 4.0}) {
        Profile p("power:n=" + format_full(n));
        double nu = 1.0 / (n + 2.0);
        for (double G : {10.0, 1000.0}) {
            for (double T : {0.25, 1.0}) {
                double expected = 2.0 * G * nu * std::pow(T, 1.0 / (2.0 * nu));
                double got = phase_integral(p, G, 0.0, T);
                r.residual = std::max(r.residual, std::fabs(got - expected) / expected);
            }
        }
    }
    r.detail = "quadrature vs 2 G nu T^(1/(2 nu)) on the power family";
    return r;
}

// ---- integrator -------------------------------------------------------------

CheckResult check_wronskian(const Env& env) {
    CheckResult r;
    r.threshold = 1e-8;
    Profile p("power:n=2");
    zx_tolerances tol{env.rel_tol, 1e-12};
    std::vector<double> times = grid(-1.0, 1.0, 41);
    std::vector<zx_mode_state> states(times.size());
    zx_status status =
        zx_integrate_mode(p.get(), 1000.0, times.data(), times.size(), &tol, states.data());
    if (status != ZX_OK) {
        // The integrator refuses to continue once the drift passes 1e-6, so
        // that is a hard lower bound on the residual.
        r.residual = 1e-6;
        r.tier = env.loosened ? "warn" : "fail";
        r.detail = std::string("integration aborted: ") + zx_last_error();
        return r;
    }
    for (const auto& s : states) {
        double w = 0.0;
        api(zx_wronskian_residual(&s, &w), "wronskian");
        r.residual = std::max(r.residual, w);
    }
    if (env.loosened) {
        r.tier = "warn";
        r.detail = "rel_tol " + format_short(env.rel_tol) +
                   " is looser than the 1e-10 contract; result is advisory";
    } else {
        r.detail = "power:n=2, G=1000, 41 samples across the crossing";
    }
    return r;
}

CheckResult check_mode_oracle(const Env&) {
    CheckResult r;
    r.threshold = 1e-6;
    std::vector<double> times = grid(-1.0, 1.0, 21);
    for (double n : {1.0, 2.0, 4.0}) {
        Profile p("power:n=" + format_full(n));
        double nu = 1.0 / (n + 2.0);
        for (double g : {0.1, 1.0, 10.0}) {
            double G = g / (2.0 * nu);
            auto states = integrate_mode(p, G, times);
            for (size_t i = 0; i < times.size(); ++i) {
                zx_mode_state ana;
                api(zx_epsilon_power(n, G, times[i], &ana), "epsilon_power");
                double rel = std::abs(ceps(states[i]) - ceps(ana)) / std::abs(ceps(ana));
                r.residual = std::max(r.residual, rel);
            }
        }
    }
    r.detail = "mode function vs the Bessel solution, n in {1,2,4}, g in {0.1,1,10}";
    return r;
}

CheckResult check_adiabatic_tracking(const Env& env) {
    CheckResult r;
    r.threshold = 0.01;
    for (double n : {0.5, 2.0, 4.0}) {
        Profile p("power:n=" + format_full(n));
        double root_f = std::sqrt(profile_value(p, -0.5));
        Ensemble e = ensemble(p, 1000.0, -0.5, 32, env.jobs);
        for (double R : e.samples)
            r.residual = std::max(r.residual, std::fabs(R / root_f - 1.0));
    }
    r.detail = "R tracks sqrt(f) before the crossing at G=1000";
    return r;
}

CheckResult check_linearity(const Env&) {
    CheckResult r;
    r.threshold = 1e-8;
    Profile p("power:n=2");
    const double G = 120.0;
    const double phi = 1.1;
    std::vector<double> times = grid(-1.0, 1.0, 21);
    auto base_c = integrate_classical(p, G, 0.0, times);
    auto base_s = integrate_classical(p, G, kPi / 2.0, times);
    auto mixed = integrate_classical(p, G, phi, times);
    double scale_x = 0.0, scale_d = 0.0;
    for (const auto& s : mixed) {
        scale_x = std::max(scale_x, std::fabs(s.X));
        scale_d = std::max(scale_d, std::fabs(s.dXdT));
    }
    for (size_t i = 0; i < times.size(); ++i) {
        double x = std::cos(phi) * base_c[i].X + std::sin(phi) * base_s[i].X;
        double d = std::cos(phi) * base_c[i].dXdT + std::sin(phi) * base_s[i].dXdT;
        r.residual = std::max(r.residual, std::fabs(mixed[i].X - x) / scale_x);
        r.residual = std::max(r.residual, std::fabs(mixed[i].dXdT - d) / scale_d);
    }
    r.detail = "superposition of the phi=0 and phi=pi/2 trajectories";
    return r;
}

CheckResult check_ensemble_mode_mean(const Env& env) {
    CheckResult r;
    r.threshold = 1e-6;
    Profile p("power:n=2");
    Ensemble e = ensemble(p, 1000.0, 1.0, 64, env.jobs);
    auto state = integrate_mode(p, 1000.0, {1.0});
    double mode_ratio = 0.0;
    api(zx_mode_energy_ratio(p.get(), 1000.0, &state[0], &mode_ratio), "mode ratio");
    r.residual = std::fabs(e.mean - mode_ratio) / mode_ratio;
    r.detail = "phase-grid mean (K=64) vs the mode energy ratio";
    return r;
}

// ---- specfun ----------------------------------------------------------------

// Shared with the specfun-check subcommand; each identity becomes one entry.

// ---- analytic ---------------------------------------------------------------

CheckResult check_curve_oracle(const Env&) {
    CheckResult r;
    r.threshold = 1e-6;
    std::vector<double> times = grid(-1.0, 1.0, 21);
    for (double n : {0.5, 1.0, 2.0, 4.0}) {
        Profile p("power:n=" + format_full(n));
        for (double g : {0.1, 1.0, 10.0}) {
            double G = g * (n + 2.0) / 2.0;
            auto states = integrate_mode(p, G, times);
            std::vector<double> ana(times.size()), num(times.size());
            double scale = 0.0;
            for (size_t i = 0; i < times.size(); ++i) {
                api(zx_energy_ratio_curve(n, G, times[i], &ana[i]), "energy_ratio_curve");
                api(zx_mode_energy_ratio(p.get(), G, &states[i], &num[i]), "mode ratio");
                scale = std::max(scale, ana[i]);
            }
            for (size_t i = 0; i < times.size(); ++i)
                r.residual = std::max(r.residual, std::fabs(ana[i] - num[i]) / scale);
        }
    }
    r.detail = "closed-form R(T) vs integrated mode energy";
    return r;
}

CheckResult check_beta_pair_identity(const Env&) {
    CheckResult r;
    r.threshold = 1e-14;
    for (double n : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        double beta = 0.0;
        zx_pair u;
        api(zx_beta_single(n, &beta), "beta_single");
        api(zx_u_pair_single(n, &u), "u_pair_single");
        double from_pair = 1.0 + 2.0 * std::norm(cum(u));
        r.residual = std::max(r.residual, std::fabs(beta - from_pair) / beta);
    }
    r.detail = "beta = 1 + 2 |u-|^2 for the single-crossing pair";
    return r;
}

CheckResult check_rho_convergence(const Env&) {
    CheckResult r;
    r.threshold = 0.0;
    std::string seq;
    for (double nu : {1.0 / 3.0, 0.25, 1.0 / 6.0}) {
        double beta = 0.0;
        api(zx_beta_single(1.0 / nu - 2.0, &beta), "beta_single");
        double d[3];
        int k = 0;
        for (double g : {1e2, 1e3, 1e4}) {
            double rho = 0.0;
            api(zx_rho_of_g(nu, g, &rho), "rho_of_g");
            d[k++] = std::fabs(rho - beta);
        }
        r.residual = std::max({r.residual, d[1] - d[0], d[2] - d[1]});
        seq += (seq.empty() ? "" : "; ") + ("nu=" + format_short(nu) + ": " +
               format_short(d[0]) + " > " + format_short(d[1]) + " > " + format_short(d[2]));
    }
    r.detail = "|rho - beta| decreasing along g = 1e2, 1e3, 1e4 (" + seq + ")";
    return r;
}

CheckResult check_curve_start(const Env&) {
    CheckResult r;
    r.threshold = 1e-10;
    for (double n : {0.5, 1.0, 2.0, 4.0}) {
        for (double g : {0.1, 1.0, 10.0}) {
            double G = g * (n + 2.0) / 2.0;
            double R = 0.0;
            api(zx_energy_ratio_curve(n, G, -1.0, &R), "energy_ratio_curve");
            r.residual = std::max(r.residual, std::fabs(R - 1.0));
        }
    }
    r.detail = "closed-form R(-1) = 1";
    return r;
}

CheckResult check_epstein_reflection(const Env&) {
    CheckResult r;
    r.threshold = 0.005;
    zx_profile* raw = nullptr;
    api(zx_profile_epstein(&raw), "epstein profile");
    std::unique_ptr<zx_profile, void (*)(zx_profile*)> p(raw, zx_profile_free);
    const double omega0 = 4.0;
    double T_end = 60.0;
    std::vector<zx_mode_state> state(1);
    api(zx_integrate_mode(p.get(), omega0, &T_end, 1, nullptr, state.data()),
        "mode integration");
    double f_end = 0.0;
    api(zx_profile_value(p.get(), T_end, &f_end), "profile value");
    zx_pair pair;
    api(zx_extract_bogoliubov(&state[0], std::sqrt(f_end), 0.0, &pair), "bogoliubov");
    double re = 0.0, im = 0.0;
    api(zx_tanh_v_minus(omega0, &re, &im), "tanh_v_minus");
    double exact = std::hypot(re, im);
    r.residual = std::fabs(std::abs(cum(pair)) - exact) / exact;
    r.detail = "|u-| integrated over the tanh^2 step at omega0=4 vs the reflection "
               "formula, |v-| = " + format_full(exact);
    return r;
}

CheckResult check_epstein_quarter_point(const Env&) {
    CheckResult r;
    r.threshold = 1e-12;
    double re = 0.0, im = 0.0;
    api(zx_tanh_v_minus(0.25, &re, &im), "tanh_v_minus");
    double got = re * re + im * im;
    double expected = 1.0 / std::pow(std::sinh(kPi / 2.0), 2);
    r.residual = std::fabs(got - expected) / expected;
    r.detail = "|v-(1/4)|^2 = 1 / sinh^2(pi/2)";
    return r;
}

// ---- transitions ------------------------------------------------------------

zx_pair random_pair(std::mt19937& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    double mag = 3.0 * u01(rng) * u01(rng);
    zx_pair p = pair_from_um(std::polar(mag, angle(rng)), angle(rng));
    return p;
}

double constraint_residual(const zx_pair& p) {
    return std::fabs(std::norm(cup(p)) - std::norm(cum(p)) - 1.0);
}

CheckResult check_constraint(const Env&) {
    CheckResult r;
    r.threshold = 1e-10;
    std::mt19937 rng(2025u);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 200; ++i) {
        zx_pair acc = random_pair(rng);
        int links = 1 + (i % 5);
        for (int k = 0; k < links; ++k) {
            zx_pair w = random_pair(rng);
            zx_pair next;
            api(zx_compose_two(&acc, &w, angle(rng), &next), "compose_two");
            acc = next;
        }
        r.residual = std::max(r.residual, constraint_residual(acc));
    }
    r.detail = "|U+|^2 - |U-|^2 = 1 across random composition chains";
    return r;
}

CheckResult check_beta_formula(const Env&) {
    CheckResult r;
    r.threshold = 1e-12;
    std::mt19937 rng(99u);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 100; ++i) {
        zx_pair u = random_pair(rng);
        zx_pair w = random_pair(rng);
        double Phi = angle(rng);
        zx_pair total;
        api(zx_compose_two(&u, &w, Phi, &total), "compose_two");
        double beta = 0.0;
        api(zx_beta_of(&total, &beta), "beta_of");
        std::complex<double> cross = cup(w) * cum(w) * cup(u) * std::conj(cum(u)) *
                                     std::polar(1.0, 2.0 * Phi);
        double expected = 1.0 + 2.0 * (std::norm(cum(w)) * std::norm(cup(u)) +
                                       std::norm(cup(w)) * std::norm(cum(u)) +
                                       2.0 * cross.real());
        r.residual = std::max(r.residual, std::fabs(beta - expected) / expected);
    }
    r.detail = "composed beta vs its expansion in the factor coefficients";
    return r;
}

CheckResult check_phi_scan_extremes(const Env&) {
    CheckResult r;
    r.threshold = 1e-6;
    zx_pair u;
    api(zx_u_pair_single(2.0, &u), "u_pair_single");
    double bound_min = 0.0, bound_max = 0.0;
    api(zx_beta_extremes(&u, &u, &bound_min, &bound_max), "beta_extremes");
    double seen_min = 1e300, seen_max = -1e300;
    const int steps = 10000;
    for (int k = 0; k < steps; ++k) {
        zx_pair total;
        api(zx_compose_two(&u, &u, kPi * k / steps, &total), "compose_two");
        double beta = 0.0;
        api(zx_beta_of(&total, &beta), "beta_of");
        seen_min = std::min(seen_min, beta);
        seen_max = std::max(seen_max, beta);
    }
    double violation = std::max({bound_min - seen_min, seen_max - bound_max, 0.0});
    double gap = std::max(seen_min - bound_min, bound_max - seen_max);
    r.residual = std::max(violation, gap);
    r.detail = "scan in [" + format_full(seen_min) + ", " + format_full(seen_max) +
               "], attainable [" + format_full(bound_min) + ", " + format_full(bound_max) + "]";
    return r;
}

CheckResult check_sin2_single_stable(const Env& env) {
    CheckResult r;
    r.threshold = 0.01;
    Profile p("sin2");
    double lo = 1e300, hi = -1e300, sum = 0.0;
    for (double G : {998.0, 999.0, 1000.0, 1001.0, 1002.0}) {
        Ensemble e = ensemble(p, G, 1.0, 16, env.jobs);
        lo = std::min(lo, e.mean);
        hi = std::max(hi, e.mean);
        sum += e.mean;
    }
    r.residual = (hi - lo) / (sum / 5.0);
    r.detail = "mean R after one crossing, G = 998..1002";
    return r;
}

CheckResult check_sin2_double_sensitive(const Env& env) {
    CheckResult r;
    r.threshold = 0.0;
    Profile p("sin2");
    double lo = 1e300, hi = -1e300;
    for (double G : {998.0, 999.0, 1000.0, 1001.0, 1002.0}) {
        Ensemble e = ensemble(p, G, 3.0, 16, env.jobs);
        lo = std::min(lo, e.mean);
        hi = std::max(hi, e.mean);
    }
    // After the second crossing the interference phase makes the mean swing
    // by an O(1) factor across this same G window.
    r.residual = std::max(0.0, 0.5 - (hi - lo) / lo);
    r.detail = "mean R after two crossings spans [" + format_short(lo) + ", " +
               format_short(hi) + "] over G = 998..1002";
    return r;
}

// ---- quantum ----------------------------------------------------------------

struct Enumeration {
    long double sum = 0.0, m1 = 0.0, m2 = 0.0;
    double tail = 0.0;
};

Enumeration enumerate_distribution(long N, double um) {
    zx_pair pair = pair_from_um(um);
    zx_fock_distribution* raw = nullptr;
    api(zx_fock_distribution_create(N, &pair, 0.0, &raw), "fock distribution");
    std::unique_ptr<zx_fock_distribution, void (*)(zx_fock_distribution*)> dist(
        raw, zx_fock_distribution_free);
    Enumeration e;
    e.tail = zx_fock_distribution_tail(dist.get());
    size_t size = zx_fock_distribution_size(dist.get());
    for (size_t i = 0; i < size; ++i) {
        long level = 0;
        double prob = 0.0;
        api(zx_fock_distribution_at(dist.get(), i, &level, &prob), "distribution entry");
        long double en = level + 0.5L;
        e.sum += prob;
        e.m1 += en * prob;
        e.m2 += en * en * prob;
    }
    return e;
}

CheckResult check_distribution_norm(const Env&) {
    CheckResult r;
    r.threshold = 0.0;
    for (long N : {0L, 9L, 50L}) {
        for (double um : {0.5, 1.0, 3.0}) {
            Enumeration e = enumerate_distribution(N, um);
            double total = static_cast<double>(e.sum);
            double outside = std::max((1.0 - 1e-10) - total, total - 1.0);
            r.residual = std::max(r.residual, std::max(outside, 0.0));
        }
    }
    r.detail = "enumerated mass within [1 - tail_bound, 1]";
    return r;
}

CheckResult check_first_moment(const Env&) {
    CheckResult r;
    r.threshold = 1e-8;
    for (long N : {0L, 9L, 50L}) {
        for (double um : {0.5, 1.0, 3.0}) {
            Enumeration e = enumerate_distribution(N, um);
            double beta = 1.0 + 2.0 * um * um;
            double expected = beta * (N + 0.5);
            double got = static_cast<double>(e.m1);
            r.residual = std::max(r.residual, std::fabs(got - expected) / expected);
        }
    }
    r.detail = "mean final energy = beta (N + 1/2)";
    return r;
}

CheckResult check_second_moment(const Env&) {
    CheckResult r;
    r.threshold = 1e-7;
    for (long N : {0L, 9L, 50L}) {
        for (double um : {0.5, 1.0, 3.0}) {
            Enumeration e = enumerate_distribution(N, um);
            double var = static_cast<double>(e.m2 - e.m1 * e.m1);
            double expected = 2.0 * (1.0 + um * um) * um * um *
                              (static_cast<double>(N) * N + N + 1.0);
            r.residual = std::max(r.residual, std::fabs(var - expected) / expected);
        }
    }
    r.detail = "energy variance = 2 |u+ u-|^2 (N^2 + N + 1)";
    return r;
}

CheckResult check_mn_symmetry(const Env&) {
    CheckResult r;
    r.threshold = 0.0;
    const std::pair<long, long> pairs[] = {{0, 2}, {3, 9}, {9, 27}, {12, 4}, {50, 2}};
    for (auto [N, M] : pairs) {
        for (double um : {0.5, 1.7}) {
            zx_pair pair = pair_from_um(std::polar(um, 0.3), 0.1);
            double forward = 0.0, backward = 0.0;
            api(zx_fock_transition_prob(N, M, &pair, &forward), "transition prob");
            api(zx_fock_transition_prob(M, N, &pair, &backward), "transition prob");
            r.residual = std::max(r.residual, std::fabs(forward - backward));
        }
    }
    r.detail = "p(N -> M) = p(M -> N) exactly";
    return r;
}

CheckResult check_invariant_conservation(const Env&) {
    CheckResult r;
    r.threshold = 1e-10;
    Profile p("power:n=2");
    auto states = integrate_mode(p, 1000.0, {-0.4, 0.8});
    const zx_moments initial[] = {{0.5, 0.5, 0.0}, {1.1, 0.9, 0.6}};
    bool bound_ok = true;
    for (const auto& m0 : initial) {
        double d0 = 0.0;
        api(zx_universal_invariant(&m0, &d0), "universal invariant");
        for (const auto& mode : states) {
            zx_moments evolved;
            api(zx_evolve_moments(&m0, &mode, 1.0, &evolved), "evolve moments");
            double d1 = 0.0;
            api(zx_universal_invariant(&evolved, &d1), "universal invariant");
            r.residual = std::max(r.residual, std::fabs(d1 - d0) / d0);
            if (d1 < 0.25 * (1.0 - 1e-9)) bound_ok = false;
        }
    }
    r.detail = "D conserved through the crossing; uncertainty floor D >= 1/4 held";
    if (!bound_ok) {
        r.residual = std::max(r.residual, 1.0);
        r.detail = "evolved state fell below the D >= 1/4 uncertainty floor";
    }
    return r;
}

CheckResult check_squeezing_scan(const Env&) {
    CheckResult r;
    r.threshold = 1e-8;
    const std::pair<double, double> cases[] = {{1.8, 1.2}, {5.0, 1.0}, {3.0, 3.0}};
    for (auto [lambda, gamma] : cases) {
        double xx = lambda / 2.0;
        double pp = lambda / 2.0;
        double xp = std::sqrt(lambda * lambda - gamma * gamma);
        auto sigma = [&](double theta) {
            double c = std::cos(theta), s = std::sin(theta);
            return xx * c * c + pp * s * s + xp * s * c;
        };
        // Coarse grid, then ternary refinement around the best angle.
        double best = 0.0, best_val = sigma(0.0);
        const int K = 4096;
        for (int k = 1; k < K; ++k) {
            double theta = kPi * k / K;
            double v = sigma(theta);
            if (v < best_val) {
                best_val = v;
                best = theta;
            }
        }
        double a = best - kPi / K, b = best + kPi / K;
        for (int it = 0; it < 200; ++it) {
            double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
            if (sigma(m1) < sigma(m2))
                b = m2;
            else
                a = m1;
        }
        double scanned = 2.0 * sigma((a + b) / 2.0);
        double closed = 0.0;
        api(zx_squeezing_invariant(lambda, gamma, &closed), "squeezing invariant");
        r.residual = std::max(r.residual, std::fabs(scanned - closed));
    }
    r.detail = "minimal quadrature variance scan vs lambda - sqrt(lambda^2 - gamma^2)";
    return r;
}

CheckResult check_variance_routes(const Env&) {
    CheckResult r;
    r.threshold = 1e-7;
    zx_pair single;
    api(zx_u_pair_single(2.0, &single), "u_pair_single");
    struct Case {
        long N;
        zx_pair pair;
        const char* label;
    } cases[] = {
        {0, single, "N=0, single crossing n=2"},
        {5, pair_from_um(std::sqrt(0.5)), "N=5, |u-|^2 = 1/2"},
        {17, pair_from_um(1.0), "N=17, |u-| = 1"},
    };
    r.extra["routes"] = ordered_json::array();
    for (const auto& c : cases) {
        double closed = 0.0, quartic = 0.0, distribution = 0.0, spread = 0.0;
        api(zx_moment_variance_check(c.N, &c.pair, &closed, &quartic, &distribution, &spread),
            "moment variance check");
        r.extra["routes"].push_back(ordered_json{{"case", c.label},
                                                 {"closed_form", closed},
                                                 {"quartic_moments", quartic},
                                                 {"distribution", distribution},
                                                 {"relative_spread", spread}});
        r.residual = std::max(r.residual, spread);
    }
    r.detail = "sigma_E three ways: closed form, quartic moments, enumerated distribution";
    return r;
}

// ---- catalog ----------------------------------------------------------------

using CheckFn = CheckResult (*)(const Env&);

struct Entry {
    const char* name;
    CheckFn fn;
};

const Entry kCatalog[] = {
    {"profiles.power_even", check_power_even},
    {"profiles.phase_additivity", check_phase_additivity},
    {"profiles.phase_closed_form", check_phase_closed_form},
    {"integrate.wronskian", check_wronskian},
    {"integrate.mode_oracle", check_mode_oracle},
    {"integrate.adiabatic_tracking", check_adiabatic_tracking},
    {"integrate.linearity", check_linearity},
    {"integrate.ensemble_mode_mean", check_ensemble_mode_mean},
    {"analytic.curve_oracle", check_curve_oracle},
    {"analytic.beta_pair_identity", check_beta_pair_identity},
    {"analytic.rho_convergence", check_rho_convergence},
    {"analytic.curve_start", check_curve_start},
    {"analytic.epstein_reflection", check_epstein_reflection},
    {"analytic.epstein_quarter_point", check_epstein_quarter_point},
    {"transitions.constraint", check_constraint},
    {"transitions.beta_formula", check_beta_formula},
    {"transitions.phi_scan_extremes", check_phi_scan_extremes},
    {"transitions.sin2_single_stable", check_sin2_single_stable},
    {"transitions.sin2_double_sensitive", check_sin2_double_sensitive},
    {"quantum.distribution_norm", check_distribution_norm},
    {"quantum.first_moment", check_first_moment},
    {"quantum.second_moment", check_second_moment},
    {"quantum.mn_symmetry", check_mn_symmetry},
    {"quantum.invariant_conservation", check_invariant_conservation},
    {"quantum.squeezing_scan", check_squeezing_scan},
    {"quantum.variance_routes", check_variance_routes},
};

ordered_json entry_json(const std::string& name, const CheckResult& r) {
    ordered_json j;
    j["name"] = name;
    j["tier"] = r.tier;
    j["residual"] = r.residual;
    j["threshold"] = r.threshold;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.extra.is_object())
        for (auto& [key, value] : r.extra.items()) j[key] = value;
    return j;
}

struct SwitchoverGuard {
    explicit SwitchoverGuard(double value) : active(value != 0.0) {
        if (active) zx_set_bessel_switchover(value);
    }
    ~SwitchoverGuard() {
        if (active) zx_set_bessel_switchover(0.0);
    }
    bool active;
};

}  // namespace

namespace zxcli {

void run_verify(const VerifyOptions& opt) {
    Env env{opt.rel_tol, opt.rel_tol > kContractRelTol, resolve_jobs(opt.jobs)};
    SwitchoverGuard tamper(opt.tamper_bessel);

    ordered_json report;
    report["zerocross"] = zx_version();
    report["subcommand"] = "verify";
    std::string canonical = "verify rel_tol=" + format_full(opt.rel_tol) +
                            " tamper_bessel=" + format_full(opt.tamper_bessel);
    report["config_hash"] = hash_hex(fnv1a(canonical));
    report["config"] = ordered_json{{"rel_tol", opt.rel_tol},
                                    {"rel_tol_loosened", env.loosened},
                                    {"tamper_bessel", opt.tamper_bessel},
                                    {"jobs", env.jobs}};
    report["checks"] = ordered_json::array();

    int pass = 0, warn = 0, fail = 0;
    auto record = [&](const std::string& name, CheckResult r) {
        if (r.tier.empty()) r.tier = (r.residual <= r.threshold) ? "pass" : "fail";
        if (r.tier == "pass")
            ++pass;
        else if (r.tier == "warn")
            ++warn;
        else
            ++fail;
        report["checks"].push_back(entry_json(name, r));
    };

    for (const auto& entry : kCatalog) {
        CheckResult r;
        try {
            r = entry.fn(env);
        } catch (const std::exception& e) {
            r = CheckResult{};
            r.tier = "fail";
            r.detail = std::string("check did not run: ") + e.what();
        }
        record(entry.name, r);
    }

    std::vector<IdentityRow> rows;
    try {
        specfun_identity_rows(rows);
    } catch (const std::exception& e) {
        CheckResult r;
        r.tier = "fail";
        r.detail = std::string("identity catalog did not run: ") + e.what();
        record("specfun.identities", r);
    }
    for (const auto& row : rows) {
        CheckResult r;
        r.residual = row.residual;
        r.threshold = row.threshold;
        r.detail = "worst point " + row.point;
        record("specfun." + row.name, r);
    }

    report["counts"] = ordered_json{{"pass", pass}, {"warn", warn}, {"fail", fail}};

    std::string text = report.dump(2) + "\n";
    if (opt.out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        // Written directly, not through ArtifactSet: the report must survive
        // a failing verification run.
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) throw CommandError(kExitBadConfig, "cannot write " + opt.out);
        file << text;
        file.close();
        std::printf("wrote %s\n", opt.out.c_str());
        std::printf("verify: %d pass, %d warn, %d fail\n", pass, warn, fail);
    }

    if (fail > 0)
        throw CommandError(kExitVerifyFailure,
                           std::to_string(fail) + " verification check(s) failed");
}

}  // namespace zxcli
