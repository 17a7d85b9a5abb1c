#include "qcharm/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcharm {

namespace {

int common_order(const ComplexSeries& a, const ComplexSeries& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

ComplexSeries::ComplexSeries(int order) {
    if (order < 0) throw std::invalid_argument("ComplexSeries: order must be >= 0");
    coeffs_.assign(static_cast<size_t>(order) + 1, Complex(0.0));
}

ComplexSeries::ComplexSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("ComplexSeries: empty coefficient list");
}

ComplexSeries ComplexSeries::zero(int order) { return ComplexSeries(order); }

ComplexSeries ComplexSeries::constant(Complex value, int order) {
    ComplexSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

ComplexSeries ComplexSeries::monomial(Complex coefficient, int degree, int order) {
    if (degree < 0) throw std::invalid_argument("monomial: degree must be >= 0");
    ComplexSeries s(order);
    if (degree <= order) s.coeffs_[static_cast<size_t>(degree)] = coefficient;
    return s;
}

Complex ComplexSeries::coeff(int k) const {
    if (k < 0) throw std::invalid_argument("coeff: negative index");
    if (k > order()) return Complex(0.0);
    return coeffs_[static_cast<size_t>(k)];
}

ComplexSeries ComplexSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("truncated: new order out of range");
    return ComplexSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

ComplexSeries ComplexSeries::extended(int new_order) const {
    if (new_order < order()) throw std::invalid_argument("extended: new order below current");
    std::vector<Complex> c(coeffs_);
    c.resize(static_cast<size_t>(new_order) + 1, Complex(0.0));
    return ComplexSeries(std::move(c));
}

ComplexSeries add(const ComplexSeries& a, const ComplexSeries& b) {
    const int n = common_order(a, b);
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return ComplexSeries(std::move(c));
}

ComplexSeries sub(const ComplexSeries& a, const ComplexSeries& b) {
    const int n = common_order(a, b);
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
    return ComplexSeries(std::move(c));
}

ComplexSeries mul(const ComplexSeries& a, const ComplexSeries& b) {
    const int n = common_order(a, b);
    std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex(0.0));
    for (int i = 0; i <= n; ++i) {
        const Complex ai = a.coeff(i);
        if (ai == Complex(0.0)) continue;
        for (int j = 0; i + j <= n; ++j) c[static_cast<size_t>(i + j)] += ai * b.coeff(j);
    }
    return ComplexSeries(std::move(c));
}

ComplexSeries div(const ComplexSeries& a, const ComplexSeries& b) {
    const Complex b0 = b.coeff(0);
    if (b0 == Complex(0.0))
        throw std::domain_error("div: divisor has zero constant term");
    const int n = common_order(a, b);
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Complex acc = a.coeff(i);
        for (int j = 1; j <= i; ++j) acc -= b.coeff(j) * c[static_cast<size_t>(i - j)];
        c[static_cast<size_t>(i)] = acc / b0;
    }
    return ComplexSeries(std::move(c));
}

ComplexSeries scale(const ComplexSeries& a, Complex factor) {
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= factor;
    return ComplexSeries(std::move(c));
}

ComplexSeries derivative(const ComplexSeries& a) {
    if (a.order() == 0) return ComplexSeries::zero(0);
    std::vector<Complex> c(static_cast<size_t>(a.order()));
    for (int m = 0; m < a.order(); ++m)
        c[static_cast<size_t>(m)] = static_cast<double>(m + 1) * a.coeff(m + 1);
    return ComplexSeries(std::move(c));
}

ComplexSeries antiderivative(const ComplexSeries& a) {
    std::vector<Complex> c(static_cast<size_t>(a.order()) + 2, Complex(0.0));
    for (int m = 0; m <= a.order(); ++m)
        c[static_cast<size_t>(m + 1)] = a.coeff(m) / static_cast<double>(m + 1);
    return ComplexSeries(std::move(c));
}

ComplexSeries exp_series(const ComplexSeries& a) {
    const int n = a.order();
    std::vector<Complex> e(static_cast<size_t>(n) + 1);
    e[0] = std::exp(a.coeff(0));
    for (int i = 1; i <= n; ++i) {
        Complex acc(0.0);
        for (int j = 1; j <= i; ++j)
            acc += static_cast<double>(j) * a.coeff(j) * e[static_cast<size_t>(i - j)];
        e[static_cast<size_t>(i)] = acc / static_cast<double>(i);
    }
    return ComplexSeries(std::move(e));
}

ComplexSeries log_series(const ComplexSeries& a) {
    if (a.coeff(0) != Complex(1.0))
        throw std::domain_error("log_series: constant term must be exactly 1");
    const int n = a.order();
    std::vector<Complex> l(static_cast<size_t>(n) + 1, Complex(0.0));
    for (int i = 1; i <= n; ++i) {
        Complex acc = static_cast<double>(i) * a.coeff(i);
        for (int j = 1; j < i; ++j)
            acc -= static_cast<double>(j) * l[static_cast<size_t>(j)] * a.coeff(i - j);
        l[static_cast<size_t>(i)] = acc / static_cast<double>(i);
    }
    return ComplexSeries(std::move(l));
}

ComplexSeries pow_series(const ComplexSeries& a, double exponent) {
    return exp_series(scale(log_series(a), Complex(exponent)));
}

Complex eval(const ComplexSeries& a, Complex z) {
    if (std::abs(z) >= 1.0)
        throw std::domain_error("eval: |z| must be < 1 (open unit disk)");
    Complex acc(0.0);
    for (int k = a.order(); k >= 0; --k) acc = acc * z + a.coeff(k);
    return acc;
}

}  // namespace qcharm
