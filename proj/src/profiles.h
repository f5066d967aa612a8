#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace zerocross {

// Dimensionless frequency-squared shape f(T), with omega^2(t) = omega0^2 f(t/tau).
// Value object: parameters are validated once at construction.
struct FrequencyProfile {
    enum class Kind {
        power,          // f(T) = |T|^n
        tanh_power,     // f(T) = |tanh(aT)/tanh(-a)|^n
        sin2,           // f(T) = sin^2(pi T / 2)
        epstein_tanh2,  // f(T) = tanh^2(T/2), defined on the whole line
    };

    Kind kind = Kind::power;
    double n = 2.0;
    double a = 5.0;

    static FrequencyProfile power(double n);
    static FrequencyProfile tanh_power(double n, double a = 5.0);
    static FrequencyProfile sin2();
    static FrequencyProfile epstein_tanh2();

    // Leftmost simulated time: -1 for the window profiles, -60 for the
    // Epstein shape (tanh^2(30) is 1 up to ~9e-27, below double roundoff).
    double start_time() const;
};

double f_value(const FrequencyProfile& profile, double T);

// G * integral of sqrt(f) over [T_a, T_b], adaptive to 1e-12 relative,
// split at the zero crossings inside the range.
double phase_integral(const FrequencyProfile& profile, double G, double T_a, double T_b);

struct ZeroCrossing {
    double time;
    double local_power;  // power with which f vanishes at the crossing
};

// All crossings in (-1, T_max], from analytic knowledge of each kind;
// no root-finding involved.
std::vector<ZeroCrossing> zero_crossings(const FrequencyProfile& profile, double T_max);

// CLI profile strings: "power:n=2", "tanh:n=2,a=5", "sin2" (case-insensitive,
// unknown keys rejected). The Epstein shape is programmatic only.
FrequencyProfile parse_profile(std::string_view text);
std::string profile_to_string(const FrequencyProfile& profile);

}
