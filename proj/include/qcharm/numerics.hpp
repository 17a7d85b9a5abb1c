// Shared numeric kernels: certified-bracket bisection and adaptive Simpson
// quadrature.  Production code integrates polynomials exactly; the quadrature
// here mainly backs test oracles.

#pragma once

#include <functional>

namespace qcharm {

using RealFn = std::function<double(double)>;

// A sign-change interval: lo < hi and f(lo)*f(hi) < 0.
struct Bracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

// Evaluates f at both ends and validates the sign change.
Bracket make_bracket(const RealFn& f, double lo, double hi);

struct BisectResult {
    double root;
    double residual;  // |f(root)|
    int iterations;
};

// Plain bisection until hi - lo <= tol; root is the final midpoint.
// Unconditionally convergent on a valid bracket, which matters for equations
// with logarithmic singularities near an endpoint.
BisectResult bisect(const RealFn& f, const Bracket& b, double tol);

// Adaptive Simpson with absolute tolerance; exact for cubics per panel.
// Throws on max-depth exhaustion.
double quad_adaptive(const RealFn& f, double a, double b, double tol);

}  // namespace qcharm
