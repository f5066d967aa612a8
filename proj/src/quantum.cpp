#include "quantum.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "errors.h"
#include "specfun.h"

namespace zerocross {

namespace {

// Levels feed the int-based Legendre recurrence; anything near INT_MAX is a
// caller bug, not a distribution.
constexpr long kLevelCap = 1L << 30;

// Same scale-aware acceptance test the transitions module applies on entry.
void require_pair(const BogoliubovPair& pair, const char* who) {
    double np = std::norm(pair.u_plus);
    double nm = std::norm(pair.u_minus);
    if (!std::isfinite(np) || !std::isfinite(nm) ||
        std::fabs(np - nm - 1.0) > 1e-8 * std::max(1.0, np))
        throw std::domain_error(std::string(who) + ": pair violates |u+|^2 - |u-|^2 = 1");
}

void require_level(long n, const char* who) {
    if (n < 0) throw std::domain_error(std::string(who) + ": Fock level must be nonnegative");
    if (n > kLevelCap) throw std::domain_error(std::string(who) + ": Fock level too large");
}

}  // namespace

double universal_invariant(const MomentState& m) {
    double half_xp = 0.5 * m.xp_sym;
    return m.xx * m.pp - half_xp * half_xp;
}

bool is_physical(const MomentState& m) {
    if (!std::isfinite(m.xx) || !std::isfinite(m.pp) || !std::isfinite(m.xp_sym)) return false;
    if (!(m.xx > 0.0) || !(m.pp > 0.0)) return false;
    return universal_invariant(m) >= 0.25 * (1.0 - 1e-9);
}

MomentState evolve_moments(const MomentState& initial, const ModeState& mode, double omega0) {
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
        throw std::domain_error("evolve_moments: omega0 must be positive");
    if (!is_physical(initial))
        throw std::domain_error("evolve_moments: initial moments are not a physical state");
    if (wronskian_residual(mode) > 1e-6)
        throw std::domain_error("evolve_moments: mode violates the Wronskian invariant");

    double a = mode.eps.real();
    double b = mode.eps.imag() / omega0;
    double ad = omega0 * mode.deps.real();
    double bd = mode.deps.imag();

    // The exact mode has Wronskian 2, so any deviation of the determinant
    // from 1 is integration drift. Scaling it out keeps D conserved to
    // roundoff instead of to the drift.
    double scale = 1.0 / std::sqrt(a * bd - b * ad);
    a *= scale;
    b *= scale;
    ad *= scale;
    bd *= scale;

    MomentState out;
    out.xx = a * a * initial.xx + b * b * initial.pp + a * b * initial.xp_sym;
    out.pp = ad * ad * initial.xx + bd * bd * initial.pp + ad * bd * initial.xp_sym;
    out.xp_sym = 2.0 * a * ad * initial.xx + 2.0 * b * bd * initial.pp +
                 (a * bd + ad * b) * initial.xp_sym;
    return out;
}

double mean_energy(const MomentState& m, double omega) {
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw std::domain_error("mean_energy: omega must be nonnegative");
    if (!std::isfinite(m.xx) || !std::isfinite(m.pp))
        throw std::domain_error("mean_energy: moments must be finite");
    return 0.5 * (m.pp + omega * omega * m.xx);
}

double energy_ratio_special(const ModeState& mode, double omega) {
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw std::domain_error("energy_ratio_special: omega must be nonnegative");
    return 0.5 * (omega * omega * std::norm(mode.eps) + std::norm(mode.deps));
}

FockProbForms fock_transition_prob_forms(long initial_n, long final_m,
                                         const BogoliubovPair& pair) {
    require_level(initial_n, "fock_transition_prob");
    require_level(final_m, "fock_transition_prob");
    require_pair(pair, "fock_transition_prob");

    FockProbForms out;
    if ((initial_n + final_m) % 2 != 0) return out;

    const long n_less = std::min(initial_n, final_m);
    const long n_greater = std::max(initial_n, final_m);
    const long gap = n_greater - n_less;
    const int degree = static_cast<int>((initial_n + final_m) / 2);
    const int order = static_cast<int>(gap / 2);

    const double norm_up = std::norm(pair.u_plus);
    const double norm_um = std::norm(pair.u_minus);
    const double abs_up = std::sqrt(norm_up);
    const double log_up = 0.5 * std::log(norm_up);

    const specfun::LogWeight lf_less = specfun::log_factorial(n_less);
    const specfun::LogWeight lf_greater = specfun::log_factorial(n_greater);

    specfun::ScaledValue leg = specfun::assoc_legendre_scaled(degree, order, 1.0 / abs_up);
    if (leg.mantissa != 0.0) {
        double lp = lf_less.log_magnitude - lf_greater.log_magnitude - log_up +
                    2.0 * leg.log_abs();
        out.legendre_form = std::exp(lp);
    }

    // The argument is assembled from u_minus directly, so nearly adiabatic
    // pairs keep full precision: (|u+| - 1) / (2|u+|) = |u-|^2 / (2|u+|(1+|u+|)).
    const double x = norm_um / (2.0 * abs_up * (1.0 + abs_up));
    const specfun::Hyp2f1Checked f = specfun::hyp2f1_terminating_checked(
        -static_cast<int>(n_less), static_cast<double>(n_greater) + 1.0, order + 1.0, x);
    out.condition = f.condition;
    if (std::isfinite(f.value) && f.value != 0.0 && (norm_um > 0.0 || gap == 0)) {
        double lp = std::log(2.0) + lf_greater.log_magnitude - lf_less.log_magnitude -
                    2.0 * specfun::log_factorial(order).log_magnitude -
                    (gap + 1.0) * (std::log(2.0) + log_up) +
                    2.0 * std::log(std::fabs(f.value));
        if (gap > 0) lp += 0.5 * gap * std::log(norm_um);
        out.hypergeom_form = std::exp(lp);
    } else if (!std::isfinite(f.value)) {
        out.hypergeom_form = f.value;
    }

    out.value = out.legendre_form;

    // The comparison is decisive only while the 2F1 sum keeps most of its
    // digits; condition beyond 1e12 means the alternating sum cancelled so
    // deeply that a gap is expected noise, not a formula bug, and the
    // Legendre value (whose recurrence does not cancel there) stands alone.
    double scale = std::max(out.legendre_form, out.hypergeom_form);
    if (std::isfinite(out.hypergeom_form) && scale > 1e-280 && f.condition <= 1e12) {
        if (std::fabs(out.legendre_form - out.hypergeom_form) > 1e-6 * scale)
            throw numerical_error(
                "fock_transition_prob: Legendre and hypergeometric forms disagree");
    }
    return out;
}

double fock_transition_prob(long initial_n, long final_m, const BogoliubovPair& pair) {
    return fock_transition_prob_forms(initial_n, final_m, pair).value;
}

FockDistribution fock_distribution(long initial_n, const BogoliubovPair& pair,
                                   double tail_bound) {
    require_level(initial_n, "fock_distribution");
    require_pair(pair, "fock_distribution");
    if (!(tail_bound > 0.0) || tail_bound > 1e-6)
        throw std::domain_error("fock_distribution: tail_bound must lie in (0, 1e-6]");

    // The tail decays like (|u-|^2 / |u+|^2)^k, so the term count is known
    // before doing any work; refuse pairs that would need more than 1e6.
    const double ratio = std::norm(pair.u_minus) / std::norm(pair.u_plus);
    const double decay = std::max(-std::log(std::max(ratio, 1e-300)), 1e-12);
    const double forecast =
        static_cast<double>(initial_n) + 32.0 +
        3.0 * std::log(1.0 / (tail_bound * std::max(1.0 - ratio, 1e-12))) / decay;
    if (forecast > 1e6)
        throw numerical_error("fock_distribution: pair too extreme, tail needs over 1e6 terms");

    FockDistribution out;
    out.initial_n = initial_n;

    // Moment guards keep enumerating until the running first and second
    // moments have converged as tightly as the mass; a single term is never
    // trusted because isolated levels can sit on a Legendre zero, but two
    // consecutive ones cannot (their zeros strictly interlace).
    const double guard = 0.01 * tail_bound * (1.0 - std::max(ratio, 0.5));
    long double cum = 0.0L, m1 = 0.0L, m2 = 0.0L;
    double prev_e1 = HUGE_VAL, prev_e2 = HUGE_VAL;
    for (long k = 0;; ++k) {
        if (k >= 1000000)
            throw numerical_error("fock_distribution: enumeration exceeded 1e6 terms");
        long level = initial_n % 2 + 2 * k;
        double p = fock_transition_prob(initial_n, level, pair);
        out.probs.push_back(p);
        double e1 = (level + 0.5) * p;
        double e2 = (level + 0.5) * e1;
        cum += p;
        m1 += e1;
        m2 += e2;
        if (cum >= 1.0L - static_cast<long double>(tail_bound) &&
            std::max(e1, prev_e1) <= guard * static_cast<double>(m1) &&
            std::max(e2, prev_e2) <= guard * static_cast<double>(m2))
            break;
        prev_e1 = e1;
        prev_e2 = e2;
    }
    out.tail_mass = static_cast<double>(1.0L - cum);

    const double beta = 1.0 + 2.0 * std::norm(pair.u_minus);
    const double expected = beta * (initial_n + 0.5);
    if (std::fabs(static_cast<double>(m1) - expected) > 1e-8 * expected)
        throw numerical_error("fock_distribution: first moment drifted from the pair prediction");
    return out;
}

double energy_variance_fock(long n, const BogoliubovPair& pair, double omega) {
    require_level(n, "energy_variance_fock");
    require_pair(pair, "energy_variance_fock");
    if (!std::isfinite(omega))
        throw std::domain_error("energy_variance_fock: omega must be finite");
    double dn = static_cast<double>(n);
    double cross = std::norm(pair.u_plus) * std::norm(pair.u_minus);
    return 2.0 * omega * omega * cross * (dn * dn + dn + 1.0);
}

double energy_variance_fock_normalized(long n, const BogoliubovPair& pair) {
    require_level(n, "energy_variance_fock");
    require_pair(pair, "energy_variance_fock");
    double dn = static_cast<double>(n);
    double cross = std::norm(pair.u_plus) * std::norm(pair.u_minus);
    return 2.0 * cross * (dn * dn + dn + 1.0) / (dn * dn + dn + 0.25);
}

double mandel_q(long n, const BogoliubovPair& pair) {
    require_level(n, "mandel_q");
    require_pair(pair, "mandel_q");
    double dn = static_cast<double>(n);
    double nm = std::norm(pair.u_minus);
    double denom = dn + 2.0 * nm * (dn + 0.5);
    if (denom <= 0.0)
        throw std::domain_error("mandel_q: vacuum through an adiabatic pair has no photons");
    double np = std::norm(pair.u_plus);
    double num = nm * (1.0 + 2.0 * nm) + dn * (2.0 * nm * nm - 1.0) + 2.0 * dn * dn * np * nm;
    return num / denom;
}

VarianceReport moment_variance_check(long n, const BogoliubovPair& pair) {
    require_level(n, "moment_variance_check");
    require_pair(pair, "moment_variance_check");

    VarianceReport rep;
    rep.from_closed_form = energy_variance_fock(n, pair, 1.0);

    // <E^2> assembled from the quartic Fock moments and the quadrature
    // coefficients A, B, C of the adiabatic mode, then the square of the
    // mean is removed. Long double keeps the subtraction honest when the
    // variance is orders below the mean.
    {
        long double dn = static_cast<long double>(n);
        std::complex<double> uu = pair.u_plus * pair.u_minus;
        long double beta = 1.0L + 2.0L * static_cast<long double>(std::norm(pair.u_minus));
        long double A = 2.0L * beta;
        long double B = 4.0L * uu.real();
        long double C = 4.0L * uu.imag();
        long double x4 = 0.75L * (2.0L * dn * dn + 2.0L * dn + 1.0L);
        long double x2p2 = 0.5L * (2.0L * dn * dn + 2.0L * dn - 1.0L);
        long double xpxp = 2.0L * (dn * dn + dn + 1.0L);
        long double e2 = (2.0L * x4 * (A * A + B * B) + x2p2 * (A * A - B * B) +
                          xpxp * C * C) / 16.0L;
        long double e1 = beta * (dn + 0.5L);
        rep.from_quartic_moments = static_cast<double>(e2 - e1 * e1);
    }

    {
        FockDistribution dist = fock_distribution(n, pair, 1e-10);
        long double m1 = 0.0L, m2 = 0.0L;
        for (std::size_t k = 0; k < dist.probs.size(); ++k) {
            long double w = dist.level(k) + 0.5L;
            m1 += w * dist.probs[k];
            m2 += w * w * dist.probs[k];
        }
        rep.from_distribution = static_cast<double>(m2 - m1 * m1);
    }

    double hi = std::max({rep.from_closed_form, rep.from_quartic_moments,
                          rep.from_distribution});
    double lo = std::min({rep.from_closed_form, rep.from_quartic_moments,
                          rep.from_distribution});
    double mean1 = (1.0 + 2.0 * std::norm(pair.u_minus)) * (static_cast<double>(n) + 0.5);
    // Below 1e-9 of the squared mean the quartic subtraction is roundoff;
    // such a variance counts as zero for the agreement scale.
    double scale = std::max({std::fabs(hi), std::fabs(lo), 1e-9 * mean1 * mean1});
    rep.relative_spread = (hi - lo) / scale;
    if (rep.relative_spread > 1e-7)
        throw numerical_error("moment_variance_check: the three variance routes disagree");
    return rep;
}

double squeezing_invariant(const SqueezingParams& sq) {
    if (!std::isfinite(sq.gamma) || !(sq.gamma >= 1.0))
        throw std::domain_error("squeezing_invariant: gamma must be >= 1");
    if (!std::isfinite(sq.lambda) || !(sq.lambda >= sq.gamma))
        throw std::domain_error("squeezing_invariant: lambda must be >= gamma");
    double root = std::sqrt((sq.lambda - sq.gamma) * (sq.lambda + sq.gamma));
    return sq.gamma * sq.gamma / (sq.lambda + root);
}

double squeezing_after_crossing(double lambda, double beta) {
    if (!std::isfinite(lambda) || !(lambda >= 1.0))
        throw std::domain_error("squeezing_after_crossing: lambda must be >= 1");
    if (!std::isfinite(beta) || !(beta >= 1.0))
        throw std::domain_error("squeezing_after_crossing: beta must be >= 1");
    return lambda / (beta + std::sqrt((beta - 1.0) * (beta + 1.0)));
}

}  // namespace zerocross
