#include "qcharm/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace qcharm {

Bracket make_bracket(const RealFn& f, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("make_bracket: requires lo < hi");
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (!(f_lo * f_hi < 0.0))
        throw std::invalid_argument("make_bracket: no sign change over [lo, hi]");
    return Bracket{lo, hi, f_lo, f_hi};
}

BisectResult bisect(const RealFn& f, const Bracket& b, double tol) {
    if (!(b.lo < b.hi) || !(b.f_lo * b.f_hi < 0.0))
        throw std::invalid_argument("bisect: invalid bracket");
    if (!(tol > 0.0)) throw std::invalid_argument("bisect: tol must be > 0");

    double lo = b.lo, hi = b.hi, f_lo = b.f_lo;
    int iterations = 0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval below representable resolution
        const double f_mid = f(mid);
        ++iterations;
        if (f_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if (f_lo * f_mid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    const double root = 0.5 * (lo + hi);
    return BisectResult{root, std::fabs(f(root)), iterations};
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double quad_recurse(const RealFn& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
    if (depth <= 0) throw std::runtime_error("quad_adaptive: max recursion depth exceeded");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return quad_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           quad_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double quad_adaptive(const RealFn& f, double a, double b, double tol) {
    if (!(a <= b)) throw std::invalid_argument("quad_adaptive: requires a <= b");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(fa, fm, fb, b - a);
    return quad_recurse(f, a, b, fa, fm, fb, whole, tol, 50);
}

}  // namespace qcharm
