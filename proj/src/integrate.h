#pragma once

#include <complex>
#include <span>
#include <vector>

#include "profiles.h"

namespace zerocross {

struct ClassicalState {
    double T;
    double X;
    double dXdT;
};

// Mode function in oscillator units: eps carries omega0^{1/2} epsilon,
// deps carries omega0^{-1/2} d(epsilon)/dt, so both start at unit magnitude.
struct ModeState {
    double T;
    std::complex<double> eps;
    std::complex<double> deps;
};

struct BogoliubovPair {
    std::complex<double> u_plus;
    std::complex<double> u_minus;
};

struct Tolerances {
    double rel = 1e-10;
    double abs = 1e-12;
};

// Integrates X'' + G^2 f(T) X = 0 from the profile's start time with
// X = cos(phi0), X' = G sin(phi0), returning states at sample_times.
// sample_times must be strictly increasing, start at or after the profile's
// start time, and end past it. A mesh point is forced at every zero of f and
// the stepper restarts there. Throws numerical_error if the step size
// underflows, reporting the T where it happened.
std::vector<ClassicalState> integrate_classical(const FrequencyProfile& profile, double G,
                                                double phi0, std::span<const double> sample_times,
                                                const Tolerances& tol = {});

// Same driver for the complex mode function, eps(start) = 1, deps(start) = i.
// The Wronskian residual is checked at every sample; drift beyond 1e-6 throws
// numerical_error since the run is untrustworthy at that point.
std::vector<ModeState> integrate_mode(const FrequencyProfile& profile, double G,
                                      std::span<const double> sample_times,
                                      const Tolerances& tol = {});

// |2 Im(deps conj(eps)) - 2|; zero for the exact mode function.
double wronskian_residual(const ModeState& state);

// R = f X^2 + G^{-2} X'^2, the oscillator energy over its starting energy.
double energy_ratio(const FrequencyProfile& profile, double G, const ClassicalState& state);

// Energy ratio carried by the mode function, (f |eps|^2 + |deps|^2) / 2.
double mode_energy_ratio(const FrequencyProfile& profile, double G, const ModeState& state);

struct PhaseEnsemble {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::vector<double> samples;
};

// R(T) over the deterministic phase grid phi_k = 2 pi k / K, k = 0..K-1.
// K >= 8. Samples are stored and reduced in index order; jobs > 1 runs the
// integrations on a small thread pool without changing any result.
PhaseEnsemble phase_ensemble(const FrequencyProfile& profile, double G, double T, int K,
                             const Tolerances& tol = {}, int jobs = 1);

// Inverts the quasiclassical form at one point: with Omega the instantaneous
// frequency in units omega0 and phi the phase accumulated from the crossing,
//   u_plus  = e^{-i phi} (sqrt(Omega) eps - i deps / sqrt(Omega)) / 2
//   u_minus = e^{+i phi} (sqrt(Omega) eps + i deps / sqrt(Omega)) / 2.
// Meaningful when the caller checked |dOmega/dT| / (G Omega^2) <= 0.01.
BogoliubovPair extract_bogoliubov(const ModeState& mode, double omega, double phi);

// Max over interior series points of |rho'' / G^2 + f rho - rho^{-3}| with
// rho = |eps| and rho'' from a three-point difference on the given grid.
// The series should come from integrate_mode at rel tolerance <= 1e-10.
double ermakov_residual(std::span<const ModeState> series, const FrequencyProfile& profile,
                        double G);

// count evenly spaced values from a to b inclusive; count >= 2.
std::vector<double> linspace(double a, double b, int count);

}  // namespace zerocross
