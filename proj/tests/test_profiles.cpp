#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "profiles.h"

using zerocross::FrequencyProfile;
using zerocross::f_value;
using zerocross::parse_profile;
using zerocross::phase_integral;
using zerocross::profile_to_string;
using zerocross::zero_crossings;

namespace {

// ln(cosh 5) / (5 tanh 5): the [-1, 0] phase of the tanh profile with n=2, a=5.
constexpr double kTanhPhaseRef = 0.86145786036952978;
// 4/pi: the phase of one full sin^2 arch.
constexpr double kSin2ArchRef = 1.2732395447351627;
// 2 ln cosh 30: the [0, 60] phase of the tanh^2 scattering profile.
constexpr double kEpsteinPhaseRef = 58.613705638880109;

}  // namespace

TEST_SUITE("profiles") {

TEST_CASE("factory rejects non-positive parameters") {
    CHECK_THROWS_AS(FrequencyProfile::power(0.0), std::domain_error);
    CHECK_THROWS_AS(FrequencyProfile::power(-2.0), std::domain_error);
    CHECK_THROWS_AS(FrequencyProfile::tanh_power(0.0, 5.0), std::domain_error);
    CHECK_THROWS_AS(FrequencyProfile::tanh_power(2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(FrequencyProfile::tanh_power(2.0, -1.0), std::domain_error);
}

TEST_CASE("power profile values") {
    auto p = FrequencyProfile::power(2.0);
    CHECK(f_value(p, -1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f_value(p, 0.0) == 0.0);
    CHECK(f_value(p, 0.5) == doctest::Approx(0.25).epsilon(1e-15));

    // |T|^n with n = 1/4 at T = -1/4 gives 1/sqrt(2); with n = 1/2 it gives 1/2.
    auto quarter = FrequencyProfile::power(0.25);
    CHECK(f_value(quarter, -0.25) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    auto half = FrequencyProfile::power(0.5);
    CHECK(f_value(half, -0.25) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("power profile is even in T") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (double n : {0.5, 1.0, 2.0, 3.5}) {
        auto p = FrequencyProfile::power(n);
        for (int i = 0; i < 50; ++i) {
            double t = dist(rng);
            CHECK(f_value(p, t) == doctest::Approx(f_value(p, -t)).epsilon(1e-15));
        }
    }
}

TEST_CASE("tanh profile values") {
    auto p = FrequencyProfile::tanh_power(2.0, 5.0);
    CHECK(f_value(p, -1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f_value(p, 0.0) == 0.0);
    // Saturates above 1 for T > 1 is false: tanh(aT)/tanh(a) > 1 there.
    CHECK(f_value(p, 2.0) > 1.0);
    // Near the crossing the local shape is (a T / tanh a)^n.
    double t = 1e-4;
    double expect = std::pow(5.0 * t / std::tanh(5.0), 2.0);
    CHECK(f_value(p, t) == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("sin2 profile values") {
    auto p = FrequencyProfile::sin2();
    CHECK(f_value(p, -1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f_value(p, 0.0) == 0.0);
    CHECK(f_value(p, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f_value(p, 2.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::fabs(f_value(p, 2.0)) < 1e-30);
    CHECK(f_value(p, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("scattering profile values") {
    auto p = FrequencyProfile::epstein_tanh2();
    CHECK(p.start_time() == -60.0);
    CHECK(f_value(p, 0.0) == 0.0);
    CHECK(f_value(p, 60.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f_value(p, -60.0) == doctest::Approx(1.0).epsilon(1e-15));
    // Even function of T.
    CHECK(f_value(p, 3.7) == doctest::Approx(f_value(p, -3.7)).epsilon(1e-15));
}

TEST_CASE("f_value rejects out-of-window and nonfinite times") {
    auto p = FrequencyProfile::power(2.0);
    CHECK_THROWS_AS(f_value(p, -1.5), std::domain_error);
    CHECK_THROWS_AS(f_value(p, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(f_value(p, INFINITY), std::domain_error);
    auto th = FrequencyProfile::tanh_power(2.0, 5.0);
    CHECK_THROWS_AS(f_value(th, -2.0), std::domain_error);
    // The periodic profile is defined for all finite T.
    CHECK(f_value(FrequencyProfile::sin2(), -7.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("phase integral examples") {
    auto p2 = FrequencyProfile::power(2.0);
    CHECK(phase_integral(p2, 1.0, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(phase_integral(p2, 3.0, 0.0, 1.0) == doctest::Approx(1.5).epsilon(1e-12));

    auto s = FrequencyProfile::sin2();
    CHECK(phase_integral(s, 1.0, 1.0, 3.0) == doctest::Approx(kSin2ArchRef).epsilon(1e-12));
    CHECK(phase_integral(s, 2.5, 1.0, 3.0) ==
          doctest::Approx(2.5 * kSin2ArchRef).epsilon(1e-12));

    auto th = FrequencyProfile::tanh_power(2.0, 5.0);
    CHECK(phase_integral(th, 1.0, -1.0, 0.0) == doctest::Approx(kTanhPhaseRef).epsilon(1e-12));

    auto ep = FrequencyProfile::epstein_tanh2();
    CHECK(phase_integral(ep, 1.0, 0.0, 60.0) == doctest::Approx(kEpsteinPhaseRef).epsilon(1e-12));

    CHECK(phase_integral(p2, 1.0, 0.7, 0.7) == 0.0);
}

TEST_CASE("phase integral validates arguments") {
    auto p = FrequencyProfile::power(2.0);
    CHECK_THROWS_AS(phase_integral(p, 0.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(phase_integral(p, -1.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(phase_integral(p, 1.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("phase integral is additive over subintervals") {
    std::mt19937 rng(991);
    std::uniform_real_distribution<double> dist(-1.0, 3.0);
    auto check_additive = [&](const FrequencyProfile& p) {
        for (int i = 0; i < 12; ++i) {
            double a = dist(rng), b = dist(rng), c = dist(rng);
            if (a > b) std::swap(a, b);
            if (b > c) std::swap(b, c);
            if (a > b) std::swap(a, b);
            double whole = phase_integral(p, 1.7, a, c);
            double parts = phase_integral(p, 1.7, a, b) + phase_integral(p, 1.7, b, c);
            CHECK(whole == doctest::Approx(parts).epsilon(1e-10));
        }
    };
    check_additive(FrequencyProfile::power(2.0));
    check_additive(FrequencyProfile::power(0.5));
    check_additive(FrequencyProfile::sin2());
    check_additive(FrequencyProfile::tanh_power(1.0, 5.0));
}

TEST_CASE("phase integral matches the power-profile closed form") {
    // For f = |T|^n on [0, T]: integral of T^{n/2} is 2 nu T^{1/(2 nu)}
    // with nu = 1/(n+2).
    for (double n : {0.5, 1.0, 2.0, 4.0}) {
        auto p = FrequencyProfile::power(n);
        double nu = 1.0 / (n + 2.0);
        for (double T : {0.3, 1.0, 2.0}) {
            for (double G : {1.0, 7.25}) {
                double expect = G * 2.0 * nu * std::pow(T, 1.0 / (2.0 * nu));
                CHECK(phase_integral(p, G, 0.0, T) == doctest::Approx(expect).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("zero crossings per profile") {
    auto p = FrequencyProfile::power(2.0);
    auto zs = zero_crossings(p, 1.0);
    REQUIRE(zs.size() == 1);
    CHECK(zs[0].time == 0.0);
    CHECK(zs[0].local_power == 2.0);

    auto s = FrequencyProfile::sin2();
    auto zs2 = zero_crossings(s, 3.0);
    REQUIRE(zs2.size() == 2);
    CHECK(zs2[0].time == 0.0);
    CHECK(zs2[1].time == 2.0);
    CHECK(zs2[0].local_power == 2.0);
    CHECK(zs2[1].local_power == 2.0);

    auto zs3 = zero_crossings(s, 4.0);
    REQUIRE(zs3.size() == 3);
    CHECK(zs3[2].time == 4.0);

    auto th = FrequencyProfile::tanh_power(1.0, 5.0);
    auto zs4 = zero_crossings(th, 0.5);
    REQUIRE(zs4.size() == 1);
    CHECK(zs4[0].time == 0.0);
    CHECK(zs4[0].local_power == 1.0);

    CHECK(zero_crossings(th, -0.5).empty());
    CHECK_THROWS_AS(zero_crossings(th, -1.0), std::domain_error);
    CHECK_THROWS_AS(zero_crossings(th, -2.0), std::domain_error);

    auto ep = FrequencyProfile::epstein_tanh2();
    auto zs5 = zero_crossings(ep, 60.0);
    REQUIRE(zs5.size() == 1);
    CHECK(zs5[0].time == 0.0);
    CHECK(zs5[0].local_power == 2.0);
}

TEST_CASE("profile strings parse") {
    auto p = parse_profile("power:n=2");
    CHECK(p.kind == FrequencyProfile::Kind::power);
    CHECK(p.n == 2.0);

    auto pu = parse_profile("POWER:N=2");
    CHECK(pu.kind == FrequencyProfile::Kind::power);
    CHECK(pu.n == 2.0);

    auto th = parse_profile("tanh:n=2,a=5");
    CHECK(th.kind == FrequencyProfile::Kind::tanh_power);
    CHECK(th.n == 2.0);
    CHECK(th.a == 5.0);

    auto th2 = parse_profile("tanh:n=1");
    CHECK(th2.n == 1.0);
    CHECK(th2.a == 5.0);

    auto th3 = parse_profile("tanh:a=2.5,n=0.5");
    CHECK(th3.n == 0.5);
    CHECK(th3.a == 2.5);

    auto s = parse_profile("sin2");
    CHECK(s.kind == FrequencyProfile::Kind::sin2);
    CHECK(parse_profile("SIN2").kind == FrequencyProfile::Kind::sin2);

    CHECK(parse_profile("power:n=0.25").n == 0.25);
}

TEST_CASE("profile strings reject malformed input") {
    CHECK_THROWS_AS(parse_profile("power:m=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("power"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("power:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("power:n=2,a=5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("foo"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("sin2:k=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("sin2:n=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("tanh"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("tanh:a=5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("power:n=abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("power:n=2extra"), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("power:n=-1"), std::domain_error);
    CHECK_THROWS_AS(parse_profile("tanh:n=2,a=0"), std::domain_error);
}

TEST_CASE("profile strings round-trip") {
    for (const char* text : {"power:n=2", "tanh:n=2,a=5", "sin2", "power:n=0.5",
                             "tanh:n=1,a=3.25"}) {
        auto p = parse_profile(text);
        auto q = parse_profile(profile_to_string(p));
        CHECK(p.kind == q.kind);
        CHECK(p.n == q.n);
        CHECK(p.a == q.a);
    }
}

}  // TEST_SUITE
