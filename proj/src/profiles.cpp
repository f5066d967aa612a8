#include "profiles.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "quadrature.h"

namespace zerocross {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string("FrequencyProfile: ") + what + " must be positive");
    }
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

double parse_number(const std::string& text, const std::string& key) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("profile: bad value for '" + key + "': " + text);
    }
    if (pos != text.size())
        throw std::invalid_argument("profile: bad value for '" + key + "': " + text);
    return v;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

FrequencyProfile FrequencyProfile::power(double n) {
    require_positive(n, "power index n");
    FrequencyProfile p;
    p.kind = Kind::power;
    p.n = n;
    return p;
}

FrequencyProfile FrequencyProfile::tanh_power(double n, double a) {
    require_positive(n, "power index n");
    require_positive(a, "steepness a");
    FrequencyProfile p;
    p.kind = Kind::tanh_power;
    p.n = n;
    p.a = a;
    return p;
}

FrequencyProfile FrequencyProfile::sin2() {
    FrequencyProfile p;
    p.kind = Kind::sin2;
    return p;
}

FrequencyProfile FrequencyProfile::epstein_tanh2() {
    FrequencyProfile p;
    p.kind = Kind::epstein_tanh2;
    return p;
}

double FrequencyProfile::start_time() const {
    return kind == Kind::epstein_tanh2 ? -60.0 : -1.0;
}

double f_value(const FrequencyProfile& profile, double T) {
    if (!std::isfinite(T)) throw std::domain_error("f_value: nonfinite time");
    switch (profile.kind) {
        case FrequencyProfile::Kind::power:
            if (T < -1.0) throw std::domain_error("f_value: T < -1 outside the simulated window");
            return std::pow(std::fabs(T), profile.n);
        case FrequencyProfile::Kind::tanh_power: {
            if (T < -1.0) throw std::domain_error("f_value: T < -1 outside the simulated window");
            double r = std::fabs(std::tanh(profile.a * T)) / std::tanh(profile.a);
            return std::pow(r, profile.n);
        }
        case FrequencyProfile::Kind::sin2: {
            double s = std::sin(0.5 * M_PI * T);
            return s * s;
        }
        case FrequencyProfile::Kind::epstein_tanh2: {
            double t = std::tanh(0.5 * T);
            return t * t;
        }
    }
    throw std::logic_error("f_value: unreachable");
}

std::vector<ZeroCrossing> zero_crossings(const FrequencyProfile& profile, double T_max) {
    if (!(T_max > -1.0)) throw std::domain_error("zero_crossings: T_max must exceed -1");
    std::vector<ZeroCrossing> out;
    switch (profile.kind) {
        case FrequencyProfile::Kind::power:
        case FrequencyProfile::Kind::tanh_power:
            if (T_max >= 0.0) out.push_back({0.0, profile.n});
            break;
        case FrequencyProfile::Kind::sin2:
            for (double t = 0.0; t <= T_max; t += 2.0) out.push_back({t, 2.0});
            break;
        case FrequencyProfile::Kind::epstein_tanh2:
            if (T_max >= 0.0) out.push_back({0.0, 2.0});
            break;
    }
    return out;
}

double phase_integral(const FrequencyProfile& profile, double G, double T_a, double T_b) {
    if (!(G > 0.0)) throw std::domain_error("phase_integral: G must be positive");
    if (!(T_a <= T_b)) throw std::domain_error("phase_integral: T_a must not exceed T_b");
    if (T_a == T_b) return 0.0;

    // Split at interior crossings so the |T - T_c|^{n/2} kinks sit at
    // subinterval endpoints, where the adaptive rule handles them.
    std::vector<double> cuts;
    cuts.push_back(T_a);
    if (T_b > -1.0) {
        for (const auto& zc : zero_crossings(profile, T_b)) {
            if (zc.time > T_a && zc.time < T_b) cuts.push_back(zc.time);
        }
    }
    cuts.push_back(T_b);

    auto integrand = [&profile](double t) { return std::sqrt(f_value(profile, t)); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += integrate_adaptive(integrand, cuts[i], cuts[i + 1], 1e-12);
    }
    return G * total;
}

FrequencyProfile parse_profile(std::string_view text) {
    std::string s = lower(text);
    std::string head = s;
    std::string params;
    if (auto colon = s.find(':'); colon != std::string::npos) {
        head = s.substr(0, colon);
        params = s.substr(colon + 1);
    }

    bool has_n = false, has_a = false;
    double n = 0.0, a = 5.0;
    if (!params.empty()) {
        std::size_t pos = 0;
        while (pos <= params.size()) {
            std::size_t comma = params.find(',', pos);
            std::string item = params.substr(pos, comma == std::string::npos ? std::string::npos
                                                                             : comma - pos);
            std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("profile: expected key=value, got '" + item + "'");
            std::string key = item.substr(0, eq);
            std::string val = item.substr(eq + 1);
            if (key == "n") {
                n = parse_number(val, key);
                has_n = true;
            } else if (key == "a") {
                a = parse_number(val, key);
                has_a = true;
            } else {
                throw std::invalid_argument("profile: unknown key '" + key + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }

    if (head == "power") {
        if (!has_n) throw std::invalid_argument("profile: power requires n=<value>");
        if (has_a) throw std::invalid_argument("profile: power does not take 'a'");
        return FrequencyProfile::power(n);
    }
    if (head == "tanh") {
        if (!has_n) throw std::invalid_argument("profile: tanh requires n=<value>");
        return FrequencyProfile::tanh_power(n, a);
    }
    if (head == "sin2") {
        if (has_n || has_a) throw std::invalid_argument("profile: sin2 takes no parameters");
        return FrequencyProfile::sin2();
    }
    throw std::invalid_argument("profile: unknown kind '" + head + "'");
}

std::string profile_to_string(const FrequencyProfile& profile) {
    switch (profile.kind) {
        case FrequencyProfile::Kind::power:
            return "power:n=" + format_number(profile.n);
        case FrequencyProfile::Kind::tanh_power:
            return "tanh:n=" + format_number(profile.n) + ",a=" + format_number(profile.a);
        case FrequencyProfile::Kind::sin2:
            return "sin2";
        case FrequencyProfile::Kind::epstein_tanh2:
            return "epstein-tanh2";
    }
    return "?";
}

}  // namespace zerocross
