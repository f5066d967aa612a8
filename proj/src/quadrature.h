#pragma once

#include <functional>

namespace zerocross {

// Adaptive quadrature over [a, b] built on a nested Clenshaw-Curtis pair
// (9-point rule embedded in the 17-point rule on shared nodes). Worst
// subinterval is bisected first, QUADPACK style, so integrable endpoint
// singularities converge without starving the rest of the interval.
// Throws numerical_error if the subdivision budget runs out, with the
// achieved error estimate in the message.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol);

}
