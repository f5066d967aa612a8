#ifndef ZEROCROSS_H
#define ZEROCROSS_H

/* C interface to the zerocross library: simulation of a harmonic oscillator
 * whose frequency passes through zero, closed-form Bessel/Legendre solutions
 * for the power-law neighborhood of the crossing, and the quantum statistics
 * of states carried through it.
 *
 * Every function that can fail returns zx_status and writes its outputs only
 * on ZX_OK. The failure message of the most recent call on the current
 * thread is available from zx_last_error(). Handles are created and released
 * by matching _create/_free pairs; passing NULL to a _free is a no-op.
 */

#include <stddef.h>

#if defined(_WIN32)
#define ZX_API __declspec(dllexport)
#else
#define ZX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zx_status {
    ZX_OK = 0,
    ZX_ERR_INVALID = 1,  /* malformed argument: null pointer, bad text, bad sizes */
    ZX_ERR_DOMAIN = 2,   /* arguments outside the documented domain of the operation */
    ZX_ERR_NUMERIC = 3,  /* an accuracy contract could not be met at this input */
    ZX_ERR_INTERNAL = 4,
} zx_status;

/* Library version as "major.minor.patch". Static storage; do not free. */
ZX_API const char* zx_version(void);

/* Message from the most recent failing call on this thread, or "" if the
 * most recent call succeeded. Storage is thread-local and overwritten by the
 * next API call on the same thread. */
ZX_API const char* zx_last_error(void);

/* ---- frequency profiles -------------------------------------------------
 * A profile is the dimensionless shape f(T) in omega^2(t) = omega0^2 f(t/tau).
 */

typedef struct zx_profile zx_profile;

/* Accepts "power:n=2", "tanh:n=2,a=5", "sin2" (case-insensitive). */
ZX_API zx_status zx_profile_parse(const char* text, zx_profile** out);

/* The Epstein shape f(T) = tanh^2(T/2) on the whole line; not reachable
 * through the parser because it has no finite support window. */
ZX_API zx_status zx_profile_epstein(zx_profile** out);

ZX_API void zx_profile_free(zx_profile* profile);

/* Canonical spec string of the profile. Requires size >= 64. */
ZX_API zx_status zx_profile_describe(const zx_profile* profile, char* buffer, size_t size);

/* Leftmost simulated time: -1 for the window profiles, -60 for Epstein. */
ZX_API zx_status zx_profile_start_time(const zx_profile* profile, double* out);

ZX_API zx_status zx_profile_value(const zx_profile* profile, double T, double* out);

/* G times the integral of sqrt(f) over [T_a, T_b]. */
ZX_API zx_status zx_phase_integral(const zx_profile* profile, double G, double T_a, double T_b,
                                   double* out);

/* Zeros of f in (-1, T_max] with the local power of vanishing. Writes up to
 * capacity entries (times[i], powers[i]); *count receives the total number
 * of crossings, which may exceed capacity. Either array may be NULL when
 * capacity is 0. */
ZX_API zx_status zx_zero_crossings(const zx_profile* profile, double T_max, double* times,
                                   double* powers, size_t capacity, size_t* count);

/* ---- integration --------------------------------------------------------
 * The dimensionless equation is X'' + G^2 f(T) X = 0 with G = omega0 tau.
 */

typedef struct zx_tolerances {
    double rel;
    double abs;
} zx_tolerances;

typedef struct zx_classical_state {
    double T;
    double X;
    double dXdT;
} zx_classical_state;

/* Mode function in oscillator units: (eps, deps) start at (1, i) and the
 * exact pair keeps 2 Im(deps conj(eps)) = 2. */
typedef struct zx_mode_state {
    double T;
    double eps_re;
    double eps_im;
    double deps_re;
    double deps_im;
} zx_mode_state;

/* Bogoliubov coefficients, |u+|^2 - |u-|^2 = 1. */
typedef struct zx_pair {
    double u_plus_re;
    double u_plus_im;
    double u_minus_re;
    double u_minus_im;
} zx_pair;

/* Second moments <x^2>, <p^2>, <xp + px> in hbar = m = omega0 = 1 units. */
typedef struct zx_moments {
    double xx;
    double pp;
    double xp_sym;
} zx_moments;

/* Classical trajectory with X = cos(phi0), X' = G sin(phi0) at the profile
 * start, sampled at the strictly increasing times[0..count). tol may be NULL
 * for the defaults (rel 1e-10, abs 1e-12). */
ZX_API zx_status zx_integrate_classical(const zx_profile* profile, double G, double phi0,
                                        const double* times, size_t count,
                                        const zx_tolerances* tol, zx_classical_state* out_states);

/* Complex mode function over the same driver, eps(start) = 1, deps(start) = i. */
ZX_API zx_status zx_integrate_mode(const zx_profile* profile, double G, const double* times,
                                   size_t count, const zx_tolerances* tol,
                                   zx_mode_state* out_states);

/* R = f X^2 + G^{-2} X'^2, the oscillator energy over its starting energy. */
ZX_API zx_status zx_energy_ratio(const zx_profile* profile, double G,
                                 const zx_classical_state* state, double* out);

/* Energy ratio carried by the mode, (f |eps|^2 + |deps|^2) / 2. */
ZX_API zx_status zx_mode_energy_ratio(const zx_profile* profile, double G,
                                      const zx_mode_state* state, double* out);

/* |2 Im(deps conj(eps)) - 2|; zero for the exact mode function. */
ZX_API zx_status zx_wronskian_residual(const zx_mode_state* state, double* out);

/* R(T) over the deterministic phase grid phi_k = 2 pi k / K, K >= 8.
 * out_samples may be NULL or an array of length K; jobs > 1 integrates on a
 * thread pool without changing any result. */
ZX_API zx_status zx_phase_ensemble(const zx_profile* profile, double G, double T, int K,
                                   const zx_tolerances* tol, int jobs, double* out_mean,
                                   double* out_min, double* out_max, double* out_samples);

/* Inverts the quasiclassical form at one point; omega is the instantaneous
 * frequency in units of omega0 and phi the phase accumulated since the
 * crossing. Meaningful only where the caller has checked adiabaticity. */
ZX_API zx_status zx_extract_bogoliubov(const zx_mode_state* state, double omega, double phi,
                                       zx_pair* out);

/* ---- special-function kernel -------------------------------------------- */

/* Cylinder function J_nu(x), orders within [-1, 2], x >= 0. */
ZX_API zx_status zx_bessel_j(double nu, double x, double* out);
ZX_API zx_status zx_bessel_j_prime(double nu, double x, double* out);

/* The two evaluation branches behind zx_bessel_j, exposed so consistency
 * checks can compare them across the switchover, and the switchover itself
 * so a deliberately bad value can be injected to prove the identity tests
 * catch it. Setting x <= 0 restores the default. The knob is process-global;
 * production code has no business touching it. */
ZX_API zx_status zx_bessel_j_series(double nu, double x, double* out);
ZX_API zx_status zx_bessel_j_asymptotic(double nu, double x, double* out);
ZX_API double zx_bessel_switchover(void);
ZX_API void zx_set_bessel_switchover(double x);

/* Ferrers function P_degree^order(x) on [-1, 1], Condon-Shortley phase. */
ZX_API zx_status zx_assoc_legendre(int degree, int order, double x, double* out);

/* Terminating Gauss series 2F1(a, b; c; x) for integer a <= 0, c > 0,
 * 0 <= x < 1. *condition receives sum|term| / |sum|, the cancellation
 * measure of the alternating sum; either output pointer may be NULL. */
ZX_API zx_status zx_hyp2f1_terminating(int a, double b, double c, double x, double* value,
                                       double* condition);

/* ---- closed-form crossing solutions -------------------------------------
 * Power profile f(T) = |T|^n: nu = 1/(n+2), g = 2 G nu.
 */

/* Bessel-basis mode state at T in [-1, 1], normalized like zx_integrate_mode. */
ZX_API zx_status zx_epsilon_power(double n, double G, double T, zx_mode_state* out);

/* Mode energy ratio R(T) from Bessel cross products; R(-1) = 1. */
ZX_API zx_status zx_energy_ratio_curve(double n, double G, double T, double* out);

/* Phase-averaged amplification at first passage as a function of the
 * accumulated phase g; tends to beta_single as g grows. */
ZX_API zx_status zx_rho_of_g(double nu, double g, double* out);

/* Adiabatic-limit mean amplification of a single |T|^n crossing,
 * (1 + cos^2(nu pi)) / sin^2(nu pi). */
ZX_API zx_status zx_beta_single(double n, double* out);

/* Adiabatic-limit pair of the single crossing: u+ = 1/sin(nu pi),
 * u- = i cot(nu pi). */
ZX_API zx_status zx_u_pair_single(double n, zx_pair* out);

/* Reflection coefficient v- of the Epstein profile at omega_tilde =
 * omega0 / kappa > 0. */
ZX_API zx_status zx_tanh_v_minus(double omega_tilde, double* out_re, double* out_im);

/* ---- composition of crossings ------------------------------------------- */

ZX_API zx_status zx_identity_pair(zx_pair* out);

/* Composition of two crossings separated by accumulated phase Phi; u is the
 * earlier one. */
ZX_API zx_status zx_compose_two(const zx_pair* u, const zx_pair* w, double Phi, zx_pair* out);

/* beta = 1 + 2 |u-|^2, the phase-averaged amplification of the pair. */
ZX_API zx_status zx_beta_of(const zx_pair* pair, double* out);

/* Range of beta over the inter-crossing phase,
 * 1 + 2 (|w+ u-| -+ |w- u+|)^2. */
ZX_API zx_status zx_beta_extremes(const zx_pair* u, const zx_pair* w, double* out_min,
                                  double* out_max);

/* Amplification for an arbitrary initial state. Moments need not satisfy
 * the uncertainty bound; only positive mean energy is required. */
ZX_API zx_status zx_beta_general(const zx_pair* pair, const zx_moments* moments, double omega0,
                                 double* out);

/* ---- quantum statistics -------------------------------------------------- */

/* D = xx pp - (xp_sym / 2)^2, conserved by quadratic evolution, >= 1/4 for
 * quantum states. */
ZX_API zx_status zx_universal_invariant(const zx_moments* moments, double* out);

/* Propagates second moments through the crossing using the mode state at one
 * instant. Initial state must be physical, Wronskian residual within 1e-6. */
ZX_API zx_status zx_evolve_moments(const zx_moments* initial, const zx_mode_state* mode,
                                   double omega0, zx_moments* out);

/* (pp + omega^2 xx) / 2. */
ZX_API zx_status zx_mean_energy(const zx_moments* moments, double omega, double* out);

/* Energy ratio carried by the mode for states with pp = xx and xp_sym = 0
 * at start: (omega^2 |eps|^2 + |deps|^2) / 2. */
ZX_API zx_status zx_energy_ratio_special(const zx_mode_state* mode, double omega, double* out);

/* Transition probability |<M|N>|^2 across the crossing; zero for odd M - N. */
ZX_API zx_status zx_fock_transition_prob(long initial_n, long final_m, const zx_pair* pair,
                                         double* out);

/* Both closed forms of the probability plus the cancellation measure of the
 * hypergeometric route; value repeats legendre_form. Any output pointer may
 * be NULL. */
ZX_API zx_status zx_fock_transition_prob_forms(long initial_n, long final_m, const zx_pair* pair,
                                               double* value, double* legendre_form,
                                               double* hypergeom_form, double* condition);

/* Distribution over final Fock levels for a fixed initial level; levels run
 * over the parity class of initial_n in ascending order. */
typedef struct zx_fock_distribution zx_fock_distribution;

/* tail_bound in (0, 1e-6]; pass 0 for the default 1e-10. */
ZX_API zx_status zx_fock_distribution_create(long initial_n, const zx_pair* pair,
                                             double tail_bound, zx_fock_distribution** out);
ZX_API void zx_fock_distribution_free(zx_fock_distribution* dist);
ZX_API size_t zx_fock_distribution_size(const zx_fock_distribution* dist);

/* Mass beyond the enumeration cutoff, 1 - sum of stored probabilities. */
ZX_API double zx_fock_distribution_tail(const zx_fock_distribution* dist);

ZX_API zx_status zx_fock_distribution_at(const zx_fock_distribution* dist, size_t index,
                                         long* out_level, double* out_prob);

/* sigma_E = 2 omega^2 |u+ u-|^2 (N^2 + N + 1) for an initial Fock state. */
ZX_API zx_status zx_energy_variance_fock(long n, const zx_pair* pair, double omega, double* out);

/* The frequency-free ratio sigma_E / [omega (N + 1/2)]^2. */
ZX_API zx_status zx_energy_variance_fock_normalized(long n, const zx_pair* pair, double* out);

/* Mandel Q of the final photon-number distribution. The vacuum through an
 * adiabatic pair has no photons to count: ZX_ERR_DOMAIN. */
ZX_API zx_status zx_mandel_q(long n, const zx_pair* pair, double* out);

/* sigma_E at omega = 1 three independent ways: closed form, quartic-moment
 * assembly, second central moment of the enumerated distribution. *spread is
 * the largest pairwise gap over the largest magnitude; disagreement beyond
 * 1e-7 is ZX_ERR_NUMERIC. Output pointers may be NULL. */
ZX_API zx_status zx_moment_variance_check(long n, const zx_pair* pair, double* closed_form,
                                          double* quartic, double* distribution, double* spread);

/* Invariant squeezing coefficient s = lambda - sqrt(lambda^2 - gamma^2) of a
 * state with E = lambda omega / 2 and D = gamma^2 / 4; lambda >= gamma >= 1. */
ZX_API zx_status zx_squeezing_invariant(double lambda, double gamma, double* out);

/* Squeezing acquired by a round state (gamma = lambda) through an adiabatic
 * crossing of mean amplification beta: s = lambda / (beta + sqrt(beta^2 - 1)). */
ZX_API zx_status zx_squeezing_after_crossing(double lambda, double beta, double* out);

#ifdef __cplusplus
}
#endif

#endif /* ZEROCROSS_H */
