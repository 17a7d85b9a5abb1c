// Truncated complex power series on the unit disk.
//
// A ComplexSeries holds coefficients c[0..N] of c0 + c1 z + ... + cN z^N,
// a Taylor series truncated at degree N.  Binary operations truncate to the
// smaller operand order: results never carry coefficients the inputs cannot
// determine.

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qcharm {

using Complex = std::complex<double>;

// Default truncation order used by the mapping constructors.
inline constexpr int kDefaultOrder = 64;

class ComplexSeries {
public:
    // Zero series of the given order (order+1 stored coefficients).
    explicit ComplexSeries(int order);
    // Takes ownership of a coefficient list; order = size - 1.
    explicit ComplexSeries(std::vector<Complex> coeffs);

    static ComplexSeries zero(int order);
    static ComplexSeries constant(Complex value, int order);
    // coefficient * z^degree
    static ComplexSeries monomial(Complex coefficient, int degree, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of z^k; zero for k beyond the truncation order.
    Complex coeff(int k) const;
    std::span<const Complex> coeffs() const { return coeffs_; }

    // Drops all terms of degree > new_order (new_order <= order).
    ComplexSeries truncated(int new_order) const;
    // Zero-pads up to new_order.  Only meaningful when the stored
    // coefficients are the exact function (a polynomial); callers that pad a
    // genuinely truncated series fabricate data.
    ComplexSeries extended(int new_order) const;

private:
    std::vector<Complex> coeffs_;
};

ComplexSeries add(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries sub(const ComplexSeries& a, const ComplexSeries& b);
// Cauchy product, truncated at min(a.order, b.order).
ComplexSeries mul(const ComplexSeries& a, const ComplexSeries& b);
// Series quotient a/b; requires b.coeff(0) != 0.
ComplexSeries div(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries scale(const ComplexSeries& a, Complex factor);

// Coefficient m of the result is (m+1)*coeff(m+1); order drops by one
// (a constant maps to the zero series of order 0).
ComplexSeries derivative(const ComplexSeries& a);
// Term-wise primitive with zero constant term; order grows by one.
ComplexSeries antiderivative(const ComplexSeries& a);

// Formal exponential, by the recurrence obtained from (exp a)' = a' exp a.
ComplexSeries exp_series(const ComplexSeries& a);
// Formal logarithm with log 1 = 0; requires coeff(0) == 1 exactly.
ComplexSeries log_series(const ComplexSeries& a);
// a^e via exp_series(e * log_series(a)), principal branch; coeff(0) == 1.
ComplexSeries pow_series(const ComplexSeries& a, double exponent);

// Horner evaluation of the truncated polynomial; requires |z| < 1.
Complex eval(const ComplexSeries& a, Complex z);

}  // namespace qcharm
