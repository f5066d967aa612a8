#pragma once

#include <vector>

#include "integrate.h"

namespace zerocross {

// Second moments of the oscillator state in hbar = m = 1 units. Mean values
// of x and p are taken as zero; for displaced states the same propagation
// applies to the variance triple, so nothing is lost.
struct MomentState {
    double xx = 0.5;      // <x^2>
    double pp = 0.5;      // <p^2>
    double xp_sym = 0.0;  // <xp + px>
};

// D = xx pp - (xp_sym / 2)^2. Conserved by every quadratic Hamiltonian and
// bounded below by 1/4 for normalizable quantum states.
double universal_invariant(const MomentState& m);

// Positive spreads and D >= 1/4, the latter with 1e-9 relative slack so
// states coming out of long integrations do not flicker at the boundary.
bool is_physical(const MomentState& m);

// Propagates the second moments through the crossing using the mode function
// at one instant. With a = Re eps, b = Im eps / omega0, adot = omega0 Re deps,
// bdot = Im deps (the mode carries omega0^{1/2} epsilon, see integrate.h):
//   xx_t = a^2 xx + b^2 pp + a b xp_sym,
//   pp_t = adot^2 xx + bdot^2 pp + adot bdot xp_sym,
//   xp_t = 2 a adot xx + 2 b bdot pp + (a bdot + adot b) xp_sym.
// The exact mode gives the map unit determinant; the numeric one is
// renormalized to it, so D is conserved to roundoff rather than to the
// integration drift. Requires a physical initial state, omega0 > 0, and a
// mode whose Wronskian residual is within 1e-6; throws std::domain_error
// otherwise.
MomentState evolve_moments(const MomentState& initial, const ModeState& mode, double omega0);

// (pp + omega^2 xx) / 2 at the instantaneous frequency. omega >= 0; the
// moments are not required to be physical (variance bookkeeping uses the
// same formula on bare squares).
double mean_energy(const MomentState& m, double omega);

// Energy ratio carried by the mode for initial states with pp = omega0^2 xx
// and xp_sym = 0: (omega^2 |eps|^2 + |deps|^2) / 2 in units of the initial
// energy, with omega the instantaneous frequency over omega0. Bounded below
// by omega because the Wronskian pins |eps| |deps| >= 1.
double energy_ratio_special(const ModeState& mode, double omega);

// Both closed forms of the Fock transition probability |<M|N>|^2 evaluated
// in log space, plus the cancellation measure of the hypergeometric route.
// legendre_form is the associated-Legendre expression; hypergeom_form is the
// terminating-2F1 expression; value repeats legendre_form, whose upward
// recurrence stays stable at any level. The routes are compared on every
// call: disagreement beyond 1e-6 relative throws numerical_error while
// condition <= 1e12, the regime where the 2F1 sum retains enough digits for
// the comparison to be decisive. Larger condition means the alternating sum
// cancelled that deeply (it does so even where the Legendre value is
// healthy) and the residual gap is expected noise, so no gate applies.
struct FockProbForms {
    double value = 0.0;
    double legendre_form = 0.0;
    double hypergeom_form = 0.0;
    double condition = 1.0;
};
FockProbForms fock_transition_prob_forms(long initial_n, long final_m, const BogoliubovPair& pair);

// Transition probability between Fock levels across the crossing described
// by the pair. Zero when |M - N| is odd. Levels must be nonnegative.
double fock_transition_prob(long initial_n, long final_m, const BogoliubovPair& pair);

// Distribution over final Fock levels for a fixed initial level. Levels run
// over the parity class of initial_n in ascending order: level(k) is the
// final level carrying probs[k]. tail_mass is 1 minus the accumulated sum,
// the residual beyond the enumeration cutoff.
struct FockDistribution {
    long initial_n = 0;
    std::vector<double> probs;
    double tail_mass = 0.0;

    long level(std::size_t k) const { return initial_n % 2 + 2 * static_cast<long>(k); }
};

// Enumerates the distribution until the accumulated mass reaches
// 1 - tail_bound and the running first and second moments have converged to
// matching precision. tail_bound must lie in (0, 1e-6]. A pair whose
// geometric tail would need more than 10^6 terms throws numerical_error, as
// does a computed first moment straying from (1 + 2|u_minus|^2)(N + 1/2) by
// more than 1e-8 relative.
FockDistribution fock_distribution(long initial_n, const BogoliubovPair& pair,
                                   double tail_bound = 1e-10);

// Energy variance of an initial Fock state after the crossing:
//   sigma_E = 2 omega^2 |u_plus u_minus|^2 (N^2 + N + 1).
// Vanishes when u_minus = 0, matching the adiabatic theorem.
double energy_variance_fock(long n, const BogoliubovPair& pair, double omega);

// The frequency-free ratio sigma_E / [omega (N + 1/2)]^2
//   = 2 |u_plus u_minus|^2 (N^2 + N + 1) / (N^2 + N + 1/4).
// The denominator uses the pre-crossing energy scale, so the ratio tends to
// 2 |u_plus u_minus|^2 for large N.
double energy_variance_fock_normalized(long n, const BogoliubovPair& pair);

// Mandel Q of the final photon-number distribution,
//   Q = [|u-|^2 (1 + 2|u-|^2) + N (2|u-|^4 - 1) + 2 N^2 |u+ u-|^2]
//       / [N + 2|u-|^2 (N + 1/2)].
// The vacuum with u_minus = 0 has no photons to count and is a domain error.
double mandel_q(long n, const BogoliubovPair& pair);

// sigma_E at omega = 1 computed three independent ways: the closed form
// above, the quartic-moment assembly <E^2> - <E>^2, and the second central
// moment of fock_distribution. relative_spread is the largest pairwise gap
// over the largest magnitude.
struct VarianceReport {
    double from_closed_form = 0.0;
    double from_quartic_moments = 0.0;
    double from_distribution = 0.0;
    double relative_spread = 0.0;
};

// Throws numerical_error when the three routes spread beyond 1e-7 relative.
VarianceReport moment_variance_check(long n, const BogoliubovPair& pair);

// State shape parameters: E = lambda omega / 2 and D = gamma^2 / 4, so
// lambda >= gamma >= 1 for physical states, with equality lambda = gamma on
// states whose variance ellipse is round in the omega-scaled phase plane.
struct SqueezingParams {
    double lambda = 1.0;
    double gamma = 1.0;
};

// Invariant squeezing coefficient s = min_t sigma_x(t) / sigma_vac at fixed
// frequency: s = lambda - sqrt(lambda^2 - gamma^2), evaluated in the stable
// form gamma^2 / (lambda + sqrt(lambda^2 - gamma^2)).
double squeezing_invariant(const SqueezingParams& sq);

// Squeezing after an adiabatic pass through zero frequency for a state that
// started with gamma = lambda: lambda scales to beta lambda while gamma
// keeps its value, giving s = lambda / (beta + sqrt(beta^2 - 1)).
double squeezing_after_crossing(double lambda, double beta);

}  // namespace zerocross
