#pragma once

namespace zerocross::specfun {

// Value stored as mantissa * 2^exponent so results whose magnitude exceeds
// the double range (large-degree Legendre, factorial ratios) stay usable.
struct ScaledValue {
    double mantissa = 0.0;
    long exponent = 0;

    double to_double() const;
    double log_abs() const;
    int sign() const;
};

// log|value| plus sign, for factorial-scale weights up to n = 10^4.
struct LogWeight {
    double log_magnitude = 0.0;
    int sign = 1;
};

double gamma_fn(double x);
double log_gamma(double x);

double bessel_j(double nu, double x);
double bessel_j_prime(double nu, double x);

// The two evaluation branches are exposed so the overlap-region consistency
// check can compare them directly, and so CI can fault-inject a bad
// switchover and watch the identity tests trip.
double bessel_j_series(double nu, double x);
double bessel_j_asymptotic(double nu, double x);
double bessel_switchover();
void set_bessel_switchover(double x);

double assoc_legendre(int degree, int order, double x);
ScaledValue assoc_legendre_scaled(int degree, int order, double x);

double hyp2f1_terminating(int a, double b, double c, double x);

struct Hyp2f1Checked {
    double value = 0.0;
    // sum|term| / |sum|; 1 means no cancellation, large values mean the
    // alternating sum ate most of the working precision.
    double condition = 1.0;
};
Hyp2f1Checked hyp2f1_terminating_checked(int a, double b, double c, double x);

LogWeight log_factorial(long n);
LogWeight log_double_factorial(long n);

}
