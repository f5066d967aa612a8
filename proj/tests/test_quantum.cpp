#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "analytic.h"
#include "errors.h"
#include "integrate.h"
#include "profiles.h"
#include "quantum.h"
#include "transitions.h"

using zerocross::BogoliubovPair;
using zerocross::FockDistribution;
using zerocross::FrequencyProfile;
using zerocross::ModeState;
using zerocross::MomentState;
using zerocross::SqueezingParams;
using zerocross::VarianceReport;
using zerocross::beta_general;
using zerocross::beta_single;
using zerocross::energy_ratio_special;
using zerocross::energy_variance_fock;
using zerocross::energy_variance_fock_normalized;
using zerocross::evolve_moments;
using zerocross::extract_bogoliubov;
using zerocross::fock_distribution;
using zerocross::fock_transition_prob;
using zerocross::fock_transition_prob_forms;
using zerocross::identity_pair;
using zerocross::integrate_mode;
using zerocross::is_physical;
using zerocross::mandel_q;
using zerocross::mean_energy;
using zerocross::moment_variance_check;
using zerocross::squeezing_after_crossing;
using zerocross::squeezing_invariant;
using zerocross::u_pair_single;
using zerocross::universal_invariant;

namespace {

constexpr double kPi = 3.14159265358979323846;
// tan^2(pi/8), the single-crossing squeezing of an n = 2 profile at lambda = 1.
constexpr double kTanSqPi8 = 0.17157287525380990;
// Final-level mass at M >= 3N for N = 9 through the n = 2 pair (frozen from
// a 60-digit evaluation of the closed form, complement of the 13-term head).
constexpr double kMassAbove27 = 0.49585879103227467;

struct FockRef {
    long n;
    long m;
    double abs_um;
    double p;
};

constexpr FockRef kFockRef[] = {
#include "data/ref_fockprob.inc"
};

// Generic phases; probabilities may depend on |u_minus| only.
BogoliubovPair pair_from_um(std::complex<double> um, double up_phase = 0.3) {
    return {std::polar(std::sqrt(1.0 + std::norm(um)), up_phase), um};
}

double sigma_x_at(const MomentState& m, double omega, double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    return m.xx * c * c + m.pp * s * s / (omega * omega) + m.xp_sym * s * c / omega;
}

const MomentState kVacuum{0.5, 0.5, 0.0};

}  // namespace

TEST_SUITE("quantum") {

TEST_CASE("moment invariants and physicality") {
    CHECK(universal_invariant(kVacuum) == 0.5 * 0.5);
    CHECK(is_physical(kVacuum));
    CHECK(is_physical({2.0, 0.5, 1.2}));  // D = 1 - 0.36
    CHECK_FALSE(is_physical({0.5, 0.5, 0.1}));
    CHECK_FALSE(is_physical({-0.5, 0.5, 0.0}));
    CHECK_FALSE(is_physical({0.5, 0.0, 0.0}));
    double inf = HUGE_VAL;
    CHECK_FALSE(is_physical({inf, 0.5, 0.0}));
    // Roundoff-level dips below 1/4 stay physical.
    CHECK(is_physical({0.5, 0.5, 1e-5}));
}

TEST_CASE("identity mode returns moments unchanged") {
    ModeState start{-1.0, {1.0, 0.0}, {0.0, 1.0}};
    MomentState m{1.3, 0.7, 0.4};
    for (double omega0 : {1.0, 2.5}) {
        MomentState out = evolve_moments(m, start, omega0);
        CHECK(out.xx == m.xx);
        CHECK(out.pp == m.pp);
        CHECK(out.xp_sym == m.xp_sym);
    }
}

TEST_CASE("adiabatic evolution tracks the instantaneous frequency") {
    FrequencyProfile profile = FrequencyProfile::power(2.0);
    const double G = 1000.0;
    std::vector<double> times{-0.5, 0.6};
    auto modes = integrate_mode(profile, G, times);

    // Pre-crossing the state is still adiabatic: vacuum follows the local
    // ground state of the instantaneous frequency.
    double omega_pre = std::sqrt(zerocross::f_value(profile, -0.5));
    MomentState pre = evolve_moments(kVacuum, modes[0], 1.0);
    CHECK(pre.xx == doctest::Approx(0.5 / omega_pre).epsilon(1e-2));
    CHECK(pre.pp == doctest::Approx(0.5 * omega_pre).epsilon(1e-2));

    // D rides through the crossing untouched for any physical start.
    for (const MomentState& m : {kVacuum, MomentState{1.3, 0.7, 0.4}}) {
        double d0 = universal_invariant(m);
        for (const ModeState& mode : modes) {
            double d1 = universal_invariant(evolve_moments(m, mode, 1.0));
            CHECK(std::fabs(d1 - d0) <= 1e-10 * d0);
        }
    }
    for (const ModeState& mode : modes) {
        MomentState out = evolve_moments(kVacuum, mode, 1.0);
        CHECK(universal_invariant(out) >= 0.25 * (1.0 - 1e-9));
    }
}

TEST_CASE("evolution rejects broken inputs") {
    ModeState good{-1.0, {1.0, 0.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(evolve_moments({-1.0, 0.5, 0.0}, good, 1.0), std::domain_error);
    CHECK_THROWS_AS(evolve_moments({0.5, 0.5, 0.1}, good, 1.0), std::domain_error);
    ModeState broken{-1.0, {2.0, 0.0}, {0.0, 1.0}};  // Wronskian 4 instead of 2
    CHECK_THROWS_AS(evolve_moments(kVacuum, broken, 1.0), std::domain_error);
    CHECK_THROWS_AS(evolve_moments(kVacuum, good, 0.0), std::domain_error);
    CHECK_THROWS_AS(evolve_moments(kVacuum, good, -2.0), std::domain_error);
}

TEST_CASE("mean energy and the special-state ratio") {
    CHECK(mean_energy(kVacuum, 1.0) == 0.5);
    CHECK(mean_energy({1.0, 0.8, 0.3}, 0.0) == 0.4);
    CHECK_THROWS_AS(mean_energy(kVacuum, -1.0), std::domain_error);
    CHECK_THROWS_AS(mean_energy({HUGE_VAL, 0.5, 0.0}, 1.0), std::domain_error);

    ModeState start{-1.0, {1.0, 0.0}, {0.0, 1.0}};
    CHECK(energy_ratio_special(start, 1.0) == 1.0);
    CHECK_THROWS_AS(energy_ratio_special(start, -0.5), std::domain_error);

    // Along a real run the ratio equals the integrator's own bookkeeping and
    // never dips below the instantaneous frequency.
    FrequencyProfile profile = FrequencyProfile::power(2.0);
    const double G = 50.0;
    auto grid = zerocross::linspace(-1.0, 1.0, 81);
    auto modes = integrate_mode(profile, G, grid);
    for (const ModeState& mode : modes) {
        double omega = std::sqrt(zerocross::f_value(profile, mode.T));
        double r = energy_ratio_special(mode, omega);
        CHECK(r == doctest::Approx(zerocross::mode_energy_ratio(profile, G, mode))
                       .epsilon(1e-14));
        CHECK(r >= omega * (1.0 - 1e-12));
    }
}

TEST_CASE("special ratio equals the phase-ensemble mean at large G") {
    FrequencyProfile profile = FrequencyProfile::power(2.0);
    const double G = 1000.0;
    std::vector<double> times{1.0};
    auto modes = integrate_mode(profile, G, times);
    double from_mode = energy_ratio_special(modes[0], 1.0);

    // R(phi) is sinusoidal in 2 phi, so a 16-point uniform grid already
    // carries the exact mean.
    auto ens = zerocross::phase_ensemble(profile, G, 1.0, 16);
    CHECK(std::fabs(from_mode - ens.mean) <= 1e-6 * ens.mean);
    CHECK(from_mode == doctest::Approx(3.0).epsilon(1e-2));
}

TEST_CASE("moment propagation matches the pair form exactly") {
    FrequencyProfile profile = FrequencyProfile::power(2.0);
    const double G = 1000.0;
    std::vector<double> times{-0.4, 0.8};
    auto modes = integrate_mode(profile, G, times);
    MomentState m{1.1, 0.9, 0.6};
    double e0 = mean_energy(m, 1.0);

    for (const ModeState& mode : modes) {
        double omega = std::sqrt(zerocross::f_value(profile, mode.T));
        // Extraction inverts the quasiclassical form exactly at one instant,
        // so the energy identity E_t = omega (beta + delta beta) E_0 holds to
        // integration accuracy at any T, either side of the crossing.
        BogoliubovPair pair = extract_bogoliubov(mode, omega, 0.0);
        double lhs = mean_energy(evolve_moments(m, mode, 1.0), omega);
        double rhs = omega * beta_general(pair, m, 1.0) * e0;
        CHECK(std::fabs(lhs - rhs) <= 5e-9 * std::fabs(rhs));

        // The phase reference shifts u+- by opposite phases; beta and the
        // u+ u- product are unchanged.
        BogoliubovPair shifted = extract_bogoliubov(mode, omega, 1.3);
        CHECK(beta_general(shifted, m, 1.0) ==
              doctest::Approx(beta_general(pair, m, 1.0)).epsilon(1e-12));
    }

    // Vacuum through the n = 2 crossing: energy ratio 3 omega(t) on the far
    // side, the generalized adiabatic coefficient.
    double omega_post = std::sqrt(zerocross::f_value(profile, 0.8));
    double ratio = mean_energy(evolve_moments(kVacuum, modes[1], 1.0), omega_post) / 0.5;
    CHECK(ratio == doctest::Approx(3.0 * omega_post).epsilon(1e-2));
}

TEST_CASE("transition probabilities match the frozen table") {
    for (const FockRef& ref : kFockRef) {
        BogoliubovPair pair = pair_from_um(std::polar(ref.abs_um, 0.7), 0.3);
        auto forms = fock_transition_prob_forms(ref.n, ref.m, pair);
        CHECK(forms.value == doctest::Approx(ref.p).epsilon(1e-10));
        CHECK(forms.value == forms.legendre_form);
        // The 2F1 route keeps ~31 digits before cancellation; its condition
        // says how many survive. The heavy rows (condition up to ~5e26)
        // still come back with six digits.
        double allowed = forms.condition <= 1e12 ? 1e-9 : 1e-5;
        CHECK(std::fabs(forms.legendre_form - forms.hypergeom_form) <=
              allowed * std::max(forms.legendre_form, 1e-300));
        CHECK(forms.condition >= 1.0);

        // Phases of the pair never enter.
        BogoliubovPair other = pair_from_um(std::polar(ref.abs_um, -2.1), 1.9);
        CHECK(fock_transition_prob(ref.n, ref.m, other) ==
              doctest::Approx(forms.value).epsilon(1e-14));
    }
}

TEST_CASE("survival quartet and the even ladder from the vacuum") {
    BogoliubovPair pair = u_pair_single(2.0);
    const double quartet[] = {1.0 / std::sqrt(2.0), 1.0 / (2.0 * std::sqrt(2.0)),
                              1.0 / (16.0 * std::sqrt(2.0)), 1.0 / (32.0 * std::sqrt(2.0))};
    for (long n = 0; n < 4; ++n) {
        auto forms = fock_transition_prob_forms(n, n, pair);
        CHECK(forms.value == doctest::Approx(quartet[n]).epsilon(1e-12));
        CHECK(std::fabs(forms.legendre_form - forms.hypergeom_form) <=
              1e-9 * forms.legendre_form);
    }

    // Vacuum ladder p(2K) = (2K-1)!!/(2K)!! |u-|^{2K} / |u+|^{2K+1} for any
    // pair; the double-factorial ratio is built by a plain product.
    for (const BogoliubovPair& p :
         {pair, pair_from_um({0.0, 0.5}), pair_from_um(std::polar(3.0, 0.4))}) {
        double abs_up = std::abs(p.u_plus);
        double abs_um = std::abs(p.u_minus);
        double dfact = 1.0;
        for (long k = 0; k <= 8; ++k) {
            if (k > 0) dfact *= (2.0 * k - 1.0) / (2.0 * k);
            double target = dfact * std::pow(abs_um, 2.0 * k) / std::pow(abs_up, 2.0 * k + 1.0);
            CHECK(fock_transition_prob(0, 2 * k, p) ==
                  doctest::Approx(target).epsilon(1e-12));
        }
        double r = fock_transition_prob(0, 2, p) / fock_transition_prob(0, 0, p);
        CHECK(r == doctest::Approx(0.5 * abs_um * abs_um / (abs_up * abs_up)).epsilon(1e-12));
    }
}

TEST_CASE("probability symmetry, parity, and range") {
    BogoliubovPair pair = pair_from_um(std::polar(1.3, 0.5));
    for (long n = 0; n <= 12; ++n) {
        for (long m = n; m <= 12; ++m) {
            double p_nm = fock_transition_prob(n, m, pair);
            double p_mn = fock_transition_prob(m, n, pair);
            CHECK(p_nm == p_mn);
            if ((n + m) % 2 != 0) {
                CHECK(p_nm == 0.0);
            } else {
                CHECK(p_nm > 0.0);
                CHECK(p_nm <= 1.0 + 1e-12);
            }
        }
    }
    BogoliubovPair id = identity_pair();
    CHECK(fock_transition_prob(7, 7, id) == 1.0);
    CHECK(fock_transition_prob(7, 9, id) == 0.0);
    CHECK(fock_transition_prob(7, 11, id) == 0.0);
}

TEST_CASE("distribution shape and the frozen tail mass") {
    BogoliubovPair pair = u_pair_single(2.0);

    FockDistribution zero = fock_distribution(0, pair);
    CHECK(zero.level(0) == 0);
    CHECK(zero.probs[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(zero.probs[1] / zero.probs[0] == doctest::Approx(0.25).epsilon(1e-12));

    FockDistribution nine = fock_distribution(9, pair);
    CHECK(nine.level(0) == 1);
    CHECK(nine.tail_mass <= 1.0001e-10);
    double total = nine.tail_mass;
    double above = nine.tail_mass;
    for (std::size_t k = 0; k < nine.probs.size(); ++k) {
        total += nine.probs[k];
        if (nine.level(k) >= 27) above += nine.probs[k];
    }
    CHECK(std::fabs(total - 1.0) <= 1e-12);
    CHECK(above == doctest::Approx(kMassAbove27).epsilon(1e-8));
    CHECK(above > 0.45);
    CHECK(above < 0.55);

    for (long n : {0L, 3L, 10L}) {
        FockDistribution spike = fock_distribution(n, identity_pair());
        for (std::size_t k = 0; k < spike.probs.size(); ++k)
            CHECK(spike.probs[k] == (spike.level(k) == n ? 1.0 : 0.0));
        CHECK(std::fabs(spike.tail_mass) <= 1e-15);
    }
}

TEST_CASE("distribution moment identities across the pair grid") {
    for (long n : {0L, 1L, 5L, 17L, 50L}) {
        for (double um : {0.2, 1.0, 3.0}) {
            BogoliubovPair pair = pair_from_um(std::polar(um, 0.8 * um - 1.0));
            FockDistribution dist = fock_distribution(n, pair);

            double mass = 0.0, m1 = 0.0, m2 = 0.0;
            for (std::size_t k = 0; k < dist.probs.size(); ++k) {
                double w = dist.level(k) + 0.5;
                mass += dist.probs[k];
                m1 += w * dist.probs[k];
                m2 += w * w * dist.probs[k];
            }
            CHECK(mass >= 1.0 - 1.0001e-10);
            CHECK(mass <= 1.0 + 1e-12);

            double beta = 1.0 + 2.0 * um * um;
            double first = beta * (n + 0.5);
            CHECK(std::fabs(m1 - first) <= 1e-8 * first);

            double dn = static_cast<double>(n);
            double sigma = 2.0 * (1.0 + um * um) * um * um * (dn * dn + dn + 1.0);
            CHECK(std::fabs(m2 - m1 * m1 - sigma) <= 1e-7 * sigma);
        }
    }
}

TEST_CASE("variance closed form and its limits") {
    BogoliubovPair pair = u_pair_single(2.0);
    CHECK(energy_variance_fock(0, pair, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(energy_variance_fock(0, pair, 2.0) == doctest::Approx(16.0).epsilon(1e-14));
    CHECK(energy_variance_fock_normalized(0, pair) == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(energy_variance_fock(5, identity_pair(), 3.0) == 0.0);
    // Large N: the normalized ratio falls to 2|u+ u-|^2, a quarter of its
    // vacuum value for the n = 2 pair.
    CHECK(energy_variance_fock_normalized(1000000, pair) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK_THROWS_AS(energy_variance_fock(-1, pair, 1.0), std::domain_error);
    CHECK_THROWS_AS(energy_variance_fock(0, pair, HUGE_VAL), std::domain_error);
}

TEST_CASE("Mandel Q closed form against the distribution") {
    // |u-|^2 = 1 collapses the closed form to (3 + N + 4N^2)/(3N + 1).
    for (double phase : {0.0, 1.4}) {
        BogoliubovPair pair = pair_from_um(std::polar(1.0, phase), 0.6);
        CHECK(mandel_q(0, pair) == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(mandel_q(1, pair) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(mandel_q(2, pair) == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(mandel_q(3, pair) == doctest::Approx(4.2).epsilon(1e-12));
        long big = 100000;
        CHECK(mandel_q(big, pair) ==
              doctest::Approx(4.0 / 3.0 * static_cast<double>(big)).epsilon(1e-5));
    }

    // An untouched Fock state keeps its sub-Poissonian Q = -1.
    CHECK(mandel_q(3, identity_pair()) == -1.0);
    CHECK_THROWS_AS(mandel_q(0, identity_pair()), std::domain_error);

    // Against the enumerated number distribution.
    BogoliubovPair pair = pair_from_um(std::polar(1.2, 1.1));
    FockDistribution dist = fock_distribution(4, pair);
    double n1 = 0.0, n2 = 0.0;
    for (std::size_t k = 0; k < dist.probs.size(); ++k) {
        double level = static_cast<double>(dist.level(k));
        n1 += level * dist.probs[k];
        n2 += level * level * dist.probs[k];
    }
    double q_dist = (n2 - n1 * n1) / n1 - 1.0;
    CHECK(mandel_q(4, pair) == doctest::Approx(q_dist).epsilon(1e-7));
}

TEST_CASE("three variance routes agree") {
    VarianceReport r0 = moment_variance_check(0, u_pair_single(2.0));
    CHECK(r0.from_closed_form == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(r0.relative_spread <= 1e-7);

    VarianceReport rid = moment_variance_check(1, identity_pair());
    CHECK(std::fabs(rid.from_closed_form) <= 1e-18);
    CHECK(std::fabs(rid.from_quartic_moments) <= 1e-18);
    CHECK(std::fabs(rid.from_distribution) <= 1e-18);

    VarianceReport r5 = moment_variance_check(5, pair_from_um(std::polar(std::sqrt(0.5), 0.9)));
    CHECK(r5.relative_spread <= 1e-7);

    VarianceReport r50 = moment_variance_check(50, pair_from_um(std::polar(3.0, -0.7)));
    CHECK(r50.relative_spread <= 1e-7);
}

TEST_CASE("squeezing coefficient forms") {
    for (double lam : {1.0, 2.7}) CHECK(squeezing_invariant({lam, lam}) == lam);

    SqueezingParams sq{5.0, 2.0};
    double s = squeezing_invariant(sq);
    CHECK(s * (5.0 + std::sqrt(21.0)) == doctest::Approx(4.0).epsilon(1e-14));

    CHECK(squeezing_after_crossing(1.0, 3.0) == doctest::Approx(kTanSqPi8).epsilon(1e-12));
    // Single power-law crossing: beta = beta_single(n) turns the coefficient
    // into tan^2(nu pi / 2).
    for (double n : {0.5, 1.0, 2.0, 4.0}) {
        double nu = 1.0 / (n + 2.0);
        double t = std::tan(0.5 * nu * kPi);
        CHECK(squeezing_after_crossing(1.0, beta_single(n)) ==
              doctest::Approx(t * t).epsilon(1e-12));
    }

    // Fock states through the n = 2 crossing: squeezed up to N = 2 only.
    CHECK(squeezing_after_crossing(5.0, 3.0) == doctest::Approx(0.8578643762690495).epsilon(1e-12));
    CHECK(squeezing_after_crossing(5.0, 3.0) < 1.0);
    CHECK(squeezing_after_crossing(7.0, 3.0) == doctest::Approx(1.2010101267766693).epsilon(1e-12));
    CHECK(squeezing_after_crossing(7.0, 3.0) > 1.0);

    CHECK_THROWS_AS(squeezing_invariant({1.0, 2.0}), std::domain_error);
    CHECK_THROWS_AS(squeezing_invariant({3.0, 0.5}), std::domain_error);
    CHECK_THROWS_AS(squeezing_after_crossing(0.5, 3.0), std::domain_error);
    CHECK_THROWS_AS(squeezing_after_crossing(1.0, 0.9), std::domain_error);
}

TEST_CASE("scanned minimum of the coordinate spread matches the invariant") {
    struct Case {
        double lambda, gamma, omega, tilt;
    };
    // tilt shifts weight between xx and pp without changing lambda or gamma.
    for (const Case& c : {Case{1.0, 1.0, 1.0, 0.0}, Case{3.0, 1.2, 0.7, 1.1},
                          Case{5.0, 2.0, 1.0, 3.5}, Case{7.0, 7.0, 2.2, 0.0}}) {
        double cross = c.lambda * c.lambda - c.tilt * c.tilt - c.gamma * c.gamma;
        REQUIRE(cross >= 0.0);
        MomentState m{(c.lambda + c.tilt) / (2.0 * c.omega),
                      0.5 * c.omega * (c.lambda - c.tilt), std::sqrt(cross)};
        CHECK(universal_invariant(m) ==
              doctest::Approx(0.25 * c.gamma * c.gamma).epsilon(1e-12));
        CHECK(mean_energy(m, c.omega) == doctest::Approx(0.5 * c.lambda * c.omega).epsilon(1e-12));

        int coarse = 4096;
        int best = 0;
        double best_v = HUGE_VAL;
        for (int i = 0; i < coarse; ++i) {
            double v = sigma_x_at(m, c.omega, i * kPi / coarse);
            if (v < best_v) {
                best_v = v;
                best = i;
            }
        }
        double lo = (best - 2) * kPi / coarse;
        double hi = (best + 2) * kPi / coarse;
        for (int iter = 0; iter < 200; ++iter) {
            double u = lo + (hi - lo) / 3.0;
            double v = hi - (hi - lo) / 3.0;
            if (sigma_x_at(m, c.omega, u) < sigma_x_at(m, c.omega, v))
                hi = v;
            else
                lo = u;
        }
        double s_scan = 2.0 * c.omega * sigma_x_at(m, c.omega, 0.5 * (lo + hi));
        double s_form = squeezing_invariant({c.lambda, c.gamma});
        CHECK(std::fabs(s_scan - s_form) <= 1e-8 * s_form);
    }
}

TEST_CASE("quantum argument validation") {
    BogoliubovPair pair = u_pair_single(2.0);
    BogoliubovPair broken{{2.0, 0.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(fock_transition_prob(-1, 0, pair), std::domain_error);
    CHECK_THROWS_AS(fock_transition_prob(0, -3, pair), std::domain_error);
    CHECK_THROWS_AS(fock_transition_prob(0, 0, broken), std::domain_error);
    CHECK_THROWS_AS(fock_distribution(0, pair, 0.0), std::domain_error);
    CHECK_THROWS_AS(fock_distribution(0, pair, 2e-6), std::domain_error);
    CHECK_THROWS_AS(fock_distribution(0, pair, -1e-10), std::domain_error);
    CHECK_THROWS_AS(fock_distribution(-2, pair), std::domain_error);
    // A pair this deep in amplification would need millions of terms; the
    // forecast rejects it before any enumeration starts.
    CHECK_THROWS_AS(fock_distribution(0, pair_from_um({300.0, 0.0})),
                    zerocross::numerical_error);
    CHECK_THROWS_AS(mandel_q(2, broken), std::domain_error);
    CHECK_THROWS_AS(moment_variance_check(-1, pair), std::domain_error);
}

}  // TEST_SUITE
