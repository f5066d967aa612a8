#include "zerocross.h"

#include <complex>
#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "analytic.h"
#include "errors.h"
#include "integrate.h"
#include "profiles.h"
#include "quantum.h"
#include "specfun.h"
#include "transitions.h"

#ifndef ZX_VERSION_STRING
#define ZX_VERSION_STRING "0.0.0"
#endif

struct zx_profile {
    zerocross::FrequencyProfile value;
};

struct zx_fock_distribution {
    zerocross::FockDistribution value;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
zx_status guarded(Fn&& fn) {
    g_last_error.clear();
    try {
        fn();
        return ZX_OK;
    } catch (const zerocross::numerical_error& e) {
        g_last_error = e.what();
        return ZX_ERR_NUMERIC;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return ZX_ERR_INVALID;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return ZX_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ZX_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unidentified failure";
        return ZX_ERR_INTERNAL;
    }
}

void require(const void* ptr, const char* what) {
    if (ptr == nullptr) throw std::invalid_argument(what);
}

zerocross::Tolerances tolerances_or_default(const zx_tolerances* tol) {
    if (tol == nullptr) return {};
    return {tol->rel, tol->abs};
}

zx_classical_state pack(const zerocross::ClassicalState& s) { return {s.T, s.X, s.dXdT}; }

zx_mode_state pack(const zerocross::ModeState& s) {
    return {s.T, s.eps.real(), s.eps.imag(), s.deps.real(), s.deps.imag()};
}

zerocross::ModeState unpack(const zx_mode_state& s) {
    return {s.T, {s.eps_re, s.eps_im}, {s.deps_re, s.deps_im}};
}

zx_pair pack(const zerocross::BogoliubovPair& p) {
    return {p.u_plus.real(), p.u_plus.imag(), p.u_minus.real(), p.u_minus.imag()};
}

zerocross::BogoliubovPair unpack(const zx_pair& p) {
    return {{p.u_plus_re, p.u_plus_im}, {p.u_minus_re, p.u_minus_im}};
}

zerocross::MomentState unpack(const zx_moments& m) { return {m.xx, m.pp, m.xp_sym}; }

}  // namespace

extern "C" {

const char* zx_version(void) { return ZX_VERSION_STRING; }

const char* zx_last_error(void) { return g_last_error.c_str(); }

zx_status zx_profile_parse(const char* text, zx_profile** out) {
    return guarded([&] {
        require(text, "zx_profile_parse: null text");
        require(out, "zx_profile_parse: null output");
        auto parsed = zerocross::parse_profile(text);
        *out = new zx_profile{parsed};
    });
}

zx_status zx_profile_epstein(zx_profile** out) {
    return guarded([&] {
        require(out, "zx_profile_epstein: null output");
        *out = new zx_profile{zerocross::FrequencyProfile::epstein_tanh2()};
    });
}

void zx_profile_free(zx_profile* profile) { delete profile; }

zx_status zx_profile_describe(const zx_profile* profile, char* buffer, size_t size) {
    return guarded([&] {
        require(profile, "zx_profile_describe: null profile");
        require(buffer, "zx_profile_describe: null buffer");
        std::string text = zerocross::profile_to_string(profile->value);
        if (size < text.size() + 1)
            throw std::invalid_argument("zx_profile_describe: buffer too small");
        std::memcpy(buffer, text.c_str(), text.size() + 1);
    });
}

zx_status zx_profile_start_time(const zx_profile* profile, double* out) {
    return guarded([&] {
        require(profile, "zx_profile_start_time: null profile");
        require(out, "zx_profile_start_time: null output");
        *out = profile->value.start_time();
    });
}

zx_status zx_profile_value(const zx_profile* profile, double T, double* out) {
    return guarded([&] {
        require(profile, "zx_profile_value: null profile");
        require(out, "zx_profile_value: null output");
        *out = zerocross::f_value(profile->value, T);
    });
}

zx_status zx_phase_integral(const zx_profile* profile, double G, double T_a, double T_b,
                            double* out) {
    return guarded([&] {
        require(profile, "zx_phase_integral: null profile");
        require(out, "zx_phase_integral: null output");
        *out = zerocross::phase_integral(profile->value, G, T_a, T_b);
    });
}

zx_status zx_zero_crossings(const zx_profile* profile, double T_max, double* times,
                            double* powers, size_t capacity, size_t* count) {
    return guarded([&] {
        require(profile, "zx_zero_crossings: null profile");
        require(count, "zx_zero_crossings: null count");
        if (capacity > 0) {
            require(times, "zx_zero_crossings: null times with nonzero capacity");
            require(powers, "zx_zero_crossings: null powers with nonzero capacity");
        }
        auto crossings = zerocross::zero_crossings(profile->value, T_max);
        size_t stored = crossings.size() < capacity ? crossings.size() : capacity;
        for (size_t i = 0; i < stored; ++i) {
            times[i] = crossings[i].time;
            powers[i] = crossings[i].local_power;
        }
        *count = crossings.size();
    });
}

zx_status zx_integrate_classical(const zx_profile* profile, double G, double phi0,
                                 const double* times, size_t count, const zx_tolerances* tol,
                                 zx_classical_state* out_states) {
    return guarded([&] {
        require(profile, "zx_integrate_classical: null profile");
        require(times, "zx_integrate_classical: null times");
        require(out_states, "zx_integrate_classical: null output");
        auto states = zerocross::integrate_classical(profile->value, G, phi0, {times, count},
                                                     tolerances_or_default(tol));
        for (size_t i = 0; i < states.size(); ++i) out_states[i] = pack(states[i]);
    });
}

zx_status zx_integrate_mode(const zx_profile* profile, double G, const double* times,
                            size_t count, const zx_tolerances* tol, zx_mode_state* out_states) {
    return guarded([&] {
        require(profile, "zx_integrate_mode: null profile");
        require(times, "zx_integrate_mode: null times");
        require(out_states, "zx_integrate_mode: null output");
        auto states = zerocross::integrate_mode(profile->value, G, {times, count},
                                                tolerances_or_default(tol));
        for (size_t i = 0; i < states.size(); ++i) out_states[i] = pack(states[i]);
    });
}

zx_status zx_energy_ratio(const zx_profile* profile, double G, const zx_classical_state* state,
                          double* out) {
    return guarded([&] {
        require(profile, "zx_energy_ratio: null profile");
        require(state, "zx_energy_ratio: null state");
        require(out, "zx_energy_ratio: null output");
        *out = zerocross::energy_ratio(profile->value, G, {state->T, state->X, state->dXdT});
    });
}

zx_status zx_mode_energy_ratio(const zx_profile* profile, double G, const zx_mode_state* state,
                               double* out) {
    return guarded([&] {
        require(profile, "zx_mode_energy_ratio: null profile");
        require(state, "zx_mode_energy_ratio: null state");
        require(out, "zx_mode_energy_ratio: null output");
        *out = zerocross::mode_energy_ratio(profile->value, G, unpack(*state));
    });
}

zx_status zx_wronskian_residual(const zx_mode_state* state, double* out) {
    return guarded([&] {
        require(state, "zx_wronskian_residual: null state");
        require(out, "zx_wronskian_residual: null output");
        *out = zerocross::wronskian_residual(unpack(*state));
    });
}

zx_status zx_phase_ensemble(const zx_profile* profile, double G, double T, int K,
                            const zx_tolerances* tol, int jobs, double* out_mean,
                            double* out_min, double* out_max, double* out_samples) {
    return guarded([&] {
        require(profile, "zx_phase_ensemble: null profile");
        auto ensemble =
            zerocross::phase_ensemble(profile->value, G, T, K, tolerances_or_default(tol), jobs);
        if (out_mean != nullptr) *out_mean = ensemble.mean;
        if (out_min != nullptr) *out_min = ensemble.min;
        if (out_max != nullptr) *out_max = ensemble.max;
        if (out_samples != nullptr) {
            for (size_t i = 0; i < ensemble.samples.size(); ++i)
                out_samples[i] = ensemble.samples[i];
        }
    });
}

zx_status zx_extract_bogoliubov(const zx_mode_state* state, double omega, double phi,
                                zx_pair* out) {
    return guarded([&] {
        require(state, "zx_extract_bogoliubov: null state");
        require(out, "zx_extract_bogoliubov: null output");
        *out = pack(zerocross::extract_bogoliubov(unpack(*state), omega, phi));
    });
}

zx_status zx_bessel_j(double nu, double x, double* out) {
    return guarded([&] {
        require(out, "zx_bessel_j: null output");
        *out = zerocross::specfun::bessel_j(nu, x);
    });
}

zx_status zx_bessel_j_prime(double nu, double x, double* out) {
    return guarded([&] {
        require(out, "zx_bessel_j_prime: null output");
        *out = zerocross::specfun::bessel_j_prime(nu, x);
    });
}

zx_status zx_bessel_j_series(double nu, double x, double* out) {
    return guarded([&] {
        require(out, "zx_bessel_j_series: null output");
        *out = zerocross::specfun::bessel_j_series(nu, x);
    });
}

zx_status zx_bessel_j_asymptotic(double nu, double x, double* out) {
    return guarded([&] {
        require(out, "zx_bessel_j_asymptotic: null output");
        *out = zerocross::specfun::bessel_j_asymptotic(nu, x);
    });
}

double zx_bessel_switchover(void) { return zerocross::specfun::bessel_switchover(); }

void zx_set_bessel_switchover(double x) { zerocross::specfun::set_bessel_switchover(x); }

zx_status zx_assoc_legendre(int degree, int order, double x, double* out) {
    return guarded([&] {
        require(out, "zx_assoc_legendre: null output");
        *out = zerocross::specfun::assoc_legendre(degree, order, x);
    });
}

zx_status zx_hyp2f1_terminating(int a, double b, double c, double x, double* value,
                                double* condition) {
    return guarded([&] {
        auto checked = zerocross::specfun::hyp2f1_terminating_checked(a, b, c, x);
        if (value != nullptr) *value = checked.value;
        if (condition != nullptr) *condition = checked.condition;
    });
}

zx_status zx_epsilon_power(double n, double G, double T, zx_mode_state* out) {
    return guarded([&] {
        require(out, "zx_epsilon_power: null output");
        auto params = zerocross::PowerSolutionParams::make(n, G);
        *out = pack(zerocross::epsilon_power(params, T));
    });
}

zx_status zx_energy_ratio_curve(double n, double G, double T, double* out) {
    return guarded([&] {
        require(out, "zx_energy_ratio_curve: null output");
        auto params = zerocross::PowerSolutionParams::make(n, G);
        *out = zerocross::energy_ratio_curve(params, T);
    });
}

zx_status zx_rho_of_g(double nu, double g, double* out) {
    return guarded([&] {
        require(out, "zx_rho_of_g: null output");
        *out = zerocross::rho_of_g(nu, g);
    });
}

zx_status zx_beta_single(double n, double* out) {
    return guarded([&] {
        require(out, "zx_beta_single: null output");
        *out = zerocross::beta_single(n);
    });
}

zx_status zx_u_pair_single(double n, zx_pair* out) {
    return guarded([&] {
        require(out, "zx_u_pair_single: null output");
        *out = pack(zerocross::u_pair_single(n));
    });
}

zx_status zx_tanh_v_minus(double omega_tilde, double* out_re, double* out_im) {
    return guarded([&] {
        require(out_re, "zx_tanh_v_minus: null output");
        require(out_im, "zx_tanh_v_minus: null output");
        std::complex<double> v = zerocross::tanh_v_minus(omega_tilde);
        *out_re = v.real();
        *out_im = v.imag();
    });
}

zx_status zx_identity_pair(zx_pair* out) {
    return guarded([&] {
        require(out, "zx_identity_pair: null output");
        *out = pack(zerocross::identity_pair());
    });
}

zx_status zx_compose_two(const zx_pair* u, const zx_pair* w, double Phi, zx_pair* out) {
    return guarded([&] {
        require(u, "zx_compose_two: null pair");
        require(w, "zx_compose_two: null pair");
        require(out, "zx_compose_two: null output");
        *out = pack(zerocross::compose_two(unpack(*u), unpack(*w), Phi));
    });
}

zx_status zx_beta_of(const zx_pair* pair, double* out) {
    return guarded([&] {
        require(pair, "zx_beta_of: null pair");
        require(out, "zx_beta_of: null output");
        *out = zerocross::beta_of(unpack(*pair));
    });
}

zx_status zx_beta_extremes(const zx_pair* u, const zx_pair* w, double* out_min, double* out_max) {
    return guarded([&] {
        require(u, "zx_beta_extremes: null pair");
        require(w, "zx_beta_extremes: null pair");
        auto extremes = zerocross::beta_extremes(unpack(*u), unpack(*w));
        if (out_min != nullptr) *out_min = extremes.beta_min;
        if (out_max != nullptr) *out_max = extremes.beta_max;
    });
}

zx_status zx_beta_general(const zx_pair* pair, const zx_moments* moments, double omega0,
                          double* out) {
    return guarded([&] {
        require(pair, "zx_beta_general: null pair");
        require(moments, "zx_beta_general: null moments");
        require(out, "zx_beta_general: null output");
        *out = zerocross::beta_general(unpack(*pair), unpack(*moments), omega0);
    });
}

zx_status zx_universal_invariant(const zx_moments* moments, double* out) {
    return guarded([&] {
        require(moments, "zx_universal_invariant: null moments");
        require(out, "zx_universal_invariant: null output");
        *out = zerocross::universal_invariant(unpack(*moments));
    });
}

zx_status zx_evolve_moments(const zx_moments* initial, const zx_mode_state* mode, double omega0,
                            zx_moments* out) {
    return guarded([&] {
        require(initial, "zx_evolve_moments: null moments");
        require(mode, "zx_evolve_moments: null mode");
        require(out, "zx_evolve_moments: null output");
        auto evolved = zerocross::evolve_moments(unpack(*initial), unpack(*mode), omega0);
        *out = {evolved.xx, evolved.pp, evolved.xp_sym};
    });
}

zx_status zx_mean_energy(const zx_moments* moments, double omega, double* out) {
    return guarded([&] {
        require(moments, "zx_mean_energy: null moments");
        require(out, "zx_mean_energy: null output");
        *out = zerocross::mean_energy(unpack(*moments), omega);
    });
}

zx_status zx_energy_ratio_special(const zx_mode_state* mode, double omega, double* out) {
    return guarded([&] {
        require(mode, "zx_energy_ratio_special: null mode");
        require(out, "zx_energy_ratio_special: null output");
        *out = zerocross::energy_ratio_special(unpack(*mode), omega);
    });
}

zx_status zx_fock_transition_prob(long initial_n, long final_m, const zx_pair* pair,
                                  double* out) {
    return guarded([&] {
        require(pair, "zx_fock_transition_prob: null pair");
        require(out, "zx_fock_transition_prob: null output");
        *out = zerocross::fock_transition_prob(initial_n, final_m, unpack(*pair));
    });
}

zx_status zx_fock_transition_prob_forms(long initial_n, long final_m, const zx_pair* pair,
                                        double* value, double* legendre_form,
                                        double* hypergeom_form, double* condition) {
    return guarded([&] {
        require(pair, "zx_fock_transition_prob_forms: null pair");
        auto forms = zerocross::fock_transition_prob_forms(initial_n, final_m, unpack(*pair));
        if (value != nullptr) *value = forms.value;
        if (legendre_form != nullptr) *legendre_form = forms.legendre_form;
        if (hypergeom_form != nullptr) *hypergeom_form = forms.hypergeom_form;
        if (condition != nullptr) *condition = forms.condition;
    });
}

zx_status zx_fock_distribution_create(long initial_n, const zx_pair* pair, double tail_bound,
                                      zx_fock_distribution** out) {
    return guarded([&] {
        require(pair, "zx_fock_distribution_create: null pair");
        require(out, "zx_fock_distribution_create: null output");
        double bound = tail_bound == 0.0 ? 1e-10 : tail_bound;
        auto dist = zerocross::fock_distribution(initial_n, unpack(*pair), bound);
        *out = new zx_fock_distribution{std::move(dist)};
    });
}

void zx_fock_distribution_free(zx_fock_distribution* dist) { delete dist; }

size_t zx_fock_distribution_size(const zx_fock_distribution* dist) {
    return dist == nullptr ? 0 : dist->value.probs.size();
}

double zx_fock_distribution_tail(const zx_fock_distribution* dist) {
    return dist == nullptr ? 0.0 : dist->value.tail_mass;
}

zx_status zx_fock_distribution_at(const zx_fock_distribution* dist, size_t index,
                                  long* out_level, double* out_prob) {
    return guarded([&] {
        require(dist, "zx_fock_distribution_at: null distribution");
        if (index >= dist->value.probs.size())
            throw std::invalid_argument("zx_fock_distribution_at: index out of range");
        if (out_level != nullptr) *out_level = dist->value.level(index);
        if (out_prob != nullptr) *out_prob = dist->value.probs[index];
    });
}

zx_status zx_energy_variance_fock(long n, const zx_pair* pair, double omega, double* out) {
    return guarded([&] {
        require(pair, "zx_energy_variance_fock: null pair");
        require(out, "zx_energy_variance_fock: null output");
        *out = zerocross::energy_variance_fock(n, unpack(*pair), omega);
    });
}

zx_status zx_energy_variance_fock_normalized(long n, const zx_pair* pair, double* out) {
    return guarded([&] {
        require(pair, "zx_energy_variance_fock_normalized: null pair");
        require(out, "zx_energy_variance_fock_normalized: null output");
        *out = zerocross::energy_variance_fock_normalized(n, unpack(*pair));
    });
}

zx_status zx_mandel_q(long n, const zx_pair* pair, double* out) {
    return guarded([&] {
        require(pair, "zx_mandel_q: null pair");
        require(out, "zx_mandel_q: null output");
        *out = zerocross::mandel_q(n, unpack(*pair));
    });
}

zx_status zx_moment_variance_check(long n, const zx_pair* pair, double* closed_form,
                                   double* quartic, double* distribution, double* spread) {
    return guarded([&] {
        require(pair, "zx_moment_variance_check: null pair");
        auto report = zerocross::moment_variance_check(n, unpack(*pair));
        if (closed_form != nullptr) *closed_form = report.from_closed_form;
        if (quartic != nullptr) *quartic = report.from_quartic_moments;
        if (distribution != nullptr) *distribution = report.from_distribution;
        if (spread != nullptr) *spread = report.relative_spread;
    });
}

zx_status zx_squeezing_invariant(double lambda, double gamma, double* out) {
    return guarded([&] {
        require(out, "zx_squeezing_invariant: null output");
        *out = zerocross::squeezing_invariant({lambda, gamma});
    });
}

zx_status zx_squeezing_after_crossing(double lambda, double beta, double* out) {
    return guarded([&] {
        require(out, "zx_squeezing_after_crossing: null output");
        *out = zerocross::squeezing_after_crossing(lambda, beta);
    });
}

}  // extern "C"
