#include "analytic.h"

#include <cmath>
#include <stdexcept>

#include "specfun.h"

namespace zerocross {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Bessel cross products of orders nu-1, nu, -nu, 1-nu at one argument.
struct CrossProducts {
    double K_plus;   // J_nu^2 + J_{nu-1}^2
    double K_minus;  // J_{-nu}^2 + J_{1-nu}^2
    double K_zero;   // J_{nu-1} J_{1-nu} - J_nu J_{-nu}
};

CrossProducts cross_products(double nu, double x) {
    const double jn = specfun::bessel_j(nu, x);
    const double jn1 = specfun::bessel_j(nu - 1.0, x);
    const double j0n = specfun::bessel_j(-nu, x);
    const double j1n = specfun::bessel_j(1.0 - nu, x);
    return {jn * jn + jn1 * jn1, j0n * j0n + j1n * j1n, jn1 * j1n - jn * j0n};
}

void require_order(double nu, const char* fn) {
    if (!(nu > 0.0) || !(nu < 0.5))
        throw std::domain_error(std::string(fn) + ": nu must lie in (0, 1/2)");
}

}  // namespace

PowerSolutionParams PowerSolutionParams::make(double n, double G) {
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::domain_error("PowerSolutionParams: n must be positive");
    if (!(G > 0.0) || !std::isfinite(G))
        throw std::domain_error("PowerSolutionParams: G must be positive");
    PowerSolutionParams p;
    p.n = n;
    p.nu = 1.0 / (n + 2.0);
    p.gamma_exp = 0.5 * (n + 2.0);
    p.G = G;
    p.g = 2.0 * G * p.nu;
    return p;
}

BesselCoefficients bessel_coefficients(const PowerSolutionParams& params) {
    const double nu = params.nu;
    const double g = params.g;
    require_order(nu, "bessel_coefficients");
    if (!(g > 0.0) || !(g <= 1e5))
        throw std::domain_error("bessel_coefficients: g must lie in (0, 1e5]");

    // Match eps(-1) = 1, deps(-1) = i; the 2x2 Bessel system inverts in
    // closed form through the cross-product identity
    // J_nu J_{1-nu} + J_{-nu} J_{nu-1} = 2 sin(nu pi) / (pi x).
    const double c = kPi * g / (2.0 * std::sin(nu * kPi));
    const double jn = specfun::bessel_j(nu, g);
    const double jn1 = specfun::bessel_j(nu - 1.0, g);
    const double j0n = specfun::bessel_j(-nu, g);
    const double j1n = specfun::bessel_j(1.0 - nu, g);

    BesselCoefficients out;
    out.A_minus = c * std::complex<double>(j1n, -j0n);
    out.B_minus = c * std::complex<double>(jn1, jn);
    out.A_plus = -out.A_minus;
    out.B_plus = out.B_minus;
    return out;
}

ModeState epsilon_power(const PowerSolutionParams& params, double T) {
    if (!(T >= -1.0) || !(T <= 1.0))
        throw std::domain_error("epsilon_power: T outside [-1, 1]");
    const auto coef = bessel_coefficients(params);
    const double nu = params.nu;
    const double g = params.g;

    ModeState state;
    state.T = T;
    if (T == 0.0) {
        state.eps = coef.B_minus * std::pow(0.5 * g, -nu) / specfun::gamma_fn(1.0 - nu);
        state.deps = -coef.A_minus * std::pow(0.5 * g, nu - 1.0) / specfun::gamma_fn(nu);
        return state;
    }

    const std::complex<double> a = T < 0.0 ? coef.A_minus : coef.A_plus;
    const std::complex<double> b = T < 0.0 ? coef.B_minus : coef.B_plus;
    const double s = std::abs(T);
    const double y = g * std::pow(s, params.gamma_exp);
    const double root = std::sqrt(s);
    const double slope = std::pow(s, params.gamma_exp - 0.5);

    state.eps = root * (a * specfun::bessel_j(nu, y) + b * specfun::bessel_j(-nu, y));
    const std::complex<double> flux =
        b * specfun::bessel_j(1.0 - nu, y) - a * specfun::bessel_j(nu - 1.0, y);
    state.deps = T < 0.0 ? slope * flux : -slope * flux;
    return state;
}

double energy_ratio_curve(const PowerSolutionParams& params, double T) {
    if (!(T >= -1.0) || !(T <= 1.0))
        throw std::domain_error("energy_ratio_curve: T outside [-1, 1]");
    const double nu = params.nu;
    const double g = params.g;
    require_order(nu, "energy_ratio_curve");
    if (!(g > 0.0) || !(g <= 1e5))
        throw std::domain_error("energy_ratio_curve: g must lie in (0, 1e5]");

    const double sn = std::sin(nu * kPi);
    const double pref = kPi * g / sn * (kPi * g / sn) / 8.0;
    const CrossProducts at_g = cross_products(nu, g);

    if (T == 0.0) {
        // Only |T|^{n+1} K+(y) survives the limit: J_{nu-1}(y)^2 grows like
        // y^{2 nu - 2} and y = g |T|^{gamma} turns that into a constant.
        const double gamma_nu = specfun::gamma_fn(nu);
        const double lim = std::pow(0.5 * g, 2.0 * nu - 2.0) / (gamma_nu * gamma_nu);
        return pref * at_g.K_minus * lim;
    }

    const double s = std::abs(T);
    const double y = g * std::pow(s, params.gamma_exp);
    const CrossProducts at_y = cross_products(nu, y);
    const double sign = T < 0.0 ? -1.0 : 1.0;
    const double bracket = at_g.K_minus * at_y.K_plus + at_g.K_plus * at_y.K_minus +
                           sign * 2.0 * at_g.K_zero * at_y.K_zero;
    return std::pow(s, params.n + 1.0) * pref * bracket;
}

double rho_of_g(double nu, double g) {
    require_order(nu, "rho_of_g");
    if (!(g > 0.0) || !(g <= 1e5))
        throw std::domain_error("rho_of_g: g must lie in (0, 1e5]");
    const CrossProducts k = cross_products(nu, g);
    const double c = kPi * g / std::sin(nu * kPi);
    return 0.25 * c * c * (k.K_minus * k.K_plus + k.K_zero * k.K_zero);
}

double beta_single(double n) {
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::domain_error("beta_single: n must be positive");
    const double nu_pi = kPi / (n + 2.0);
    const double cot = std::cos(nu_pi) / std::sin(nu_pi);
    return 1.0 + 2.0 * cot * cot;
}

BogoliubovPair u_pair_single(double n) {
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::domain_error("u_pair_single: n must be positive");
    const double nu_pi = kPi / (n + 2.0);
    BogoliubovPair pair;
    pair.u_plus = 1.0 / std::sin(nu_pi);
    pair.u_minus = std::complex<double>(0.0, std::cos(nu_pi) / std::sin(nu_pi));
    return pair;
}

std::complex<double> tanh_v_minus(double omega_tilde) {
    if (!(omega_tilde > 0.0) || !std::isfinite(omega_tilde))
        throw std::domain_error("tanh_v_minus: omega_tilde must be positive");
    const double disc = 0.25 - 4.0 * omega_tilde * omega_tilde;
    if (disc >= 0.0)
        return {0.0, std::cos(kPi * std::sqrt(disc)) / std::sinh(2.0 * kPi * omega_tilde)};
    const double q = kPi * std::sqrt(-disc);
    const double w2 = 2.0 * kPi * omega_tilde;
    if (w2 < 350.0) return {0.0, std::cosh(q) / std::sinh(w2)};
    // cosh and sinh both overflow past ~710; regroup around the finite ratio
    // exp(q - w2) -> exp(-pi / (16 omega_tilde)).
    const double ratio = std::exp(q - w2) * (1.0 + std::exp(-2.0 * q)) /
                         (1.0 - std::exp(-2.0 * w2));
    return {0.0, ratio};
}

}
