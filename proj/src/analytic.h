#pragma once

#include <complex>

#include "integrate.h"
#include "profiles.h"

namespace zerocross {

// Derived constants for the power profile f(T) = |T|^n in closed form.
// nu = 1/(n+2) is the Bessel order, gamma_exp = 1/(2 nu) the argument
// exponent, and g = 2 G nu the accumulated phase between T = -1 and the
// crossing, so the Bessel argument is y(T) = g |T|^gamma_exp.
struct PowerSolutionParams {
    double n = 2.0;
    double nu = 0.25;
    double gamma_exp = 2.0;
    double G = 1.0;
    double g = 0.5;

    static PowerSolutionParams make(double n, double G);
};

// Coefficients of the positive-frequency mode in the Bessel basis,
//   eps(T) = sqrt(|T|) [A J_nu(y) + B J_{-nu}(y)],
// with the minus pair valid for T < 0 and the plus pair for T > 0.
// Normalization matches integrate_mode: eps(-1) = 1, deps(-1) = i.
struct BesselCoefficients {
    std::complex<double> A_minus;
    std::complex<double> B_minus;
    std::complex<double> A_plus;
    std::complex<double> B_plus;
};

// Requires g <= 1e5; beyond that the oscillatory Bessel evaluations lose
// the phase digits the coefficients are made of.
BesselCoefficients bessel_coefficients(const PowerSolutionParams& params);

// Closed-form mode state at T in [-1, 1]. At T = 0 the removable limits
// eps(0) = B (g/2)^{-nu} / Gamma(1 - nu) and
// deps(0) = -A (g/2)^{nu - 1} / Gamma(nu) are used.
ModeState epsilon_power(const PowerSolutionParams& params, double T);

// Mode energy ratio R(T) = (f |eps|^2 + |deps|^2) / 2 evaluated from the
// Bessel cross products instead of the assembled mode:
//   R = (|T|^{n+1} / 8) (pi g / sin(nu pi))^2
//       [K-(g) K+(y) + K+(g) K-(y) -+ 2 K0(g) K0(y)]
// with the minus sign for T < 0, the plus sign for T > 0, and
//   K+ = J_nu^2 + J_{nu-1}^2,  K- = J_{-nu}^2 + J_{1-nu}^2,
//   K0 = J_{nu-1} J_{1-nu} - J_nu J_{-nu},
// all of K+-, K0 at the argument shown. At T = 0 the finite limit
// (the K+(y) channel is the only survivor) is returned.
double energy_ratio_curve(const PowerSolutionParams& params, double T);

// Phase-averaged energy amplification at the first passage, T = +1:
//   rho(g) = (1/4) (pi g / sin(nu pi))^2 [K-(g) K+(g) + K0(g)^2].
// Interpolates between 1 (sudden, g -> 0) and beta_single (adiabatic,
// g -> infinity).
double rho_of_g(double nu, double g);

// Adiabatic-limit mean amplification for a single |T|^n crossing,
// beta = (1 + cos^2(nu pi)) / sin^2(nu pi) with nu = 1/(n+2).
double beta_single(double n);

// Single-crossing Bogoliubov pair in the adiabatic limit,
// u+ = 1/sin(nu pi), u- = i cot(nu pi); beta_single = 1 + 2 |u-|^2.
BogoliubovPair u_pair_single(double n);

// Reflection coefficient of the Epstein profile omega^2 = omega0^2
// tanh^2(kappa t / 2), omega_tilde = omega0 / kappa:
//   v- = i cos(pi sqrt(1/4 - 4 omega_tilde^2)) / sinh(2 pi omega_tilde),
// with cos continued to cosh above omega_tilde = 1/4. Requires
// omega_tilde > 0; the magnitude approaches 1 only like
// exp(-pi / (16 omega_tilde)), so it is still 0.95 at omega_tilde = 4.
std::complex<double> tanh_v_minus(double omega_tilde);

}
