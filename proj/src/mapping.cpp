#include "qcharm/mapping.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcharm {

namespace {

constexpr double kStructTol = 1e-12;

// w(t)/t for a series with w(0) = 0; drops the order by one.
ComplexSeries shift_down(const ComplexSeries& a) {
    if (a.coeff(0) != Complex(0.0))
        throw std::invalid_argument("shift_down: nonzero constant term");
    const int n = a.order() == 0 ? 0 : a.order() - 1;
    std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex(0.0));
    for (int m = 0; m <= n; ++m) c[static_cast<size_t>(m)] = a.coeff(m + 1);
    return ComplexSeries(std::move(c));
}

// Fit a polynomial series to exactly the requested order.
ComplexSeries fit_order(const ComplexSeries& a, int order) {
    if (a.order() == order) return a;
    return a.order() > order ? a.truncated(order) : a.extended(order);
}

void require_normalized(const ComplexSeries& h, const char* who) {
    if (std::abs(h.coeff(0)) > kStructTol || std::abs(h.coeff(1) - Complex(1.0)) > kStructTol)
        throw std::invalid_argument(std::string(who) + ": h must satisfy h(0)=0, h'(0)=1");
}

}  // namespace

ClassParams::ClassParams(double alpha_, Complex lambda_, int n_)
    : alpha(alpha_), lambda(lambda_), n(n_) {
    if (n < 1) throw std::invalid_argument("ClassParams: n must be a positive integer");
    if (!(alpha > 1.0 && alpha <= 1.5))
        throw std::invalid_argument("ClassParams: alpha must lie in (1, 3/2]");
    if (std::abs(lambda) > 1.0 / (n + 1))
        throw std::invalid_argument("ClassParams: |lambda| must be <= 1/(n+1)");
}

double dilatation_bound(const ClassParams& p) { return std::abs(p.lambda); }

double qc_constant(const ClassParams& p) {
    const double k = dilatation_bound(p);
    return (1.0 + k) / (1.0 - k);
}

SchwarzFunction::SchwarzFunction(ComplexSeries series, double sup_bound)
    : series_(std::move(series)), sup_bound_(sup_bound) {}

SchwarzFunction SchwarzFunction::monomial(Complex c, int m, int order) {
    if (m < 1) throw std::invalid_argument("SchwarzFunction: monomial degree must be >= 1");
    if (std::abs(c) > 1.0)
        throw std::invalid_argument("SchwarzFunction: monomial needs |c| <= 1");
    return SchwarzFunction(ComplexSeries::monomial(c, m, order), std::abs(c));
}

SchwarzFunction SchwarzFunction::from_series(ComplexSeries series, double sup_bound) {
    if (series.coeff(0) != Complex(0.0))
        throw std::invalid_argument("SchwarzFunction: constant term must be exactly 0");
    if (!(sup_bound >= 0.0 && sup_bound < 1.0))
        throw std::invalid_argument("SchwarzFunction: certified sup bound must be < 1");
    return SchwarzFunction(std::move(series), sup_bound);
}

void validate_mapping(const HarmonicMapping& f) {
    require_normalized(f.h, "validate_mapping");
    if (std::abs(f.g.coeff(0)) > 0.0)
        throw std::invalid_argument("validate_mapping: g must have zero constant term");
    if (!f.params) return;

    const ClassParams& p = *f.params;
    for (int j = 1; j <= p.n && j <= f.g.order(); ++j) {
        if (std::abs(f.g.coeff(j)) > kStructTol)
            throw std::invalid_argument("validate_mapping: b_1..b_n must vanish for members");
    }
    // (k+n) b_{k+n} = lambda k a_k for every stored co-analytic coefficient.
    for (int j = p.n + 1; j <= f.g.order(); ++j) {
        const int k = j - p.n;
        if (k > f.h.order()) break;
        const Complex lhs = static_cast<double>(j) * f.g.coeff(j);
        const Complex rhs = p.lambda * static_cast<double>(k) * f.h.coeff(k);
        if (std::abs(lhs - rhs) > kStructTol)
            throw std::invalid_argument("validate_mapping: coupling recurrence violated at k=" +
                                        std::to_string(k));
    }
}

HarmonicMapping couple_g(const ComplexSeries& h, const ClassParams& params) {
    require_normalized(h, "couple_g");
    const int n = h.order();
    const ComplexSeries factor = ComplexSeries::monomial(params.lambda, params.n, std::max(n - 1, 0));
    ComplexSeries g = antiderivative(mul(factor, derivative(h)));
    HarmonicMapping f{h, fit_order(g, n), params};
    validate_mapping(f);
    return f;
}

HarmonicMapping from_schwarz(const SchwarzFunction& w, const ClassParams& params, int order) {
    if (order < 2) throw std::invalid_argument("from_schwarz: order must be >= 2");
    if (w.sup_bound() > 1.0)
        throw std::domain_error("from_schwarz: sup|w| > 1 puts a pole of 1/(1-w) in the disk");

    const ComplexSeries wfit = fit_order(w.series(), order + 1);
    const ComplexSeries q = shift_down(wfit);  // w(t)/t, order `order`
    const ComplexSeries denom = sub(ComplexSeries::constant(Complex(1.0), order), wfit.truncated(order));
    const ComplexSeries integrand = div(q, denom);
    const ComplexSeries inner = antiderivative(integrand);
    const ComplexSeries hprime = exp_series(scale(inner, Complex(2.0 * (1.0 - params.alpha))));
    const ComplexSeries h = fit_order(antiderivative(hprime), order);
    return couple_g(h, params);
}

ComplexSeries extremal_h(int k, double alpha, int order) {
    if (k < 2) throw std::invalid_argument("extremal_h: k must be >= 2");
    if (!(alpha > 1.0 && alpha <= 1.5))
        throw std::invalid_argument("extremal_h: alpha must lie in (1, 3/2]");
    if (order < 1) throw std::invalid_argument("extremal_h: order must be >= 1");
    const double exponent = 2.0 * (alpha - 1.0) / (k - 1);
    const ComplexSeries base =
        sub(ComplexSeries::constant(Complex(1.0), order - 1),
            ComplexSeries::monomial(Complex(1.0), k - 1, order - 1));
    return antiderivative(pow_series(base, exponent));
}

ComplexSeries counterexample_h(double beta, int order) {
    if (!(beta > 2.0 && beta < 3.0))
        throw std::invalid_argument("counterexample_h: beta must lie in (2, 3)");
    if (order < 1) throw std::invalid_argument("counterexample_h: order must be >= 1");
    const ComplexSeries one_minus_z =
        sub(ComplexSeries::constant(Complex(1.0), order), ComplexSeries::monomial(Complex(1.0), 1, order));
    const ComplexSeries powed = pow_series(one_minus_z, beta);
    return scale(sub(ComplexSeries::constant(Complex(1.0), order), powed), Complex(1.0 / beta));
}

Complex counterexample_value(double beta, Complex z) {
    if (!(beta > 2.0 && beta < 3.0))
        throw std::invalid_argument("counterexample_value: beta must lie in (2, 3)");
    if (std::abs(z) >= 1.0) throw std::domain_error("counterexample_value: |z| must be < 1");
    return (Complex(1.0) - std::pow(Complex(1.0) - z, Complex(beta))) / beta;
}

std::pair<Complex, Complex> collision_pair(double beta, std::optional<double> s_opt) {
    if (!(beta > 2.0 && beta < 3.0))
        throw std::invalid_argument("collision_pair: beta must lie in (2, 3)");
    const double phi = std::numbers::pi / beta;
    const double s = s_opt.value_or(std::cos(phi));
    // s -> 0 degenerates to the boundary point 1; s >= 2 cos(pi/beta) leaves the disk.
    if (!(s >= 1e-3 && s < 2.0 * std::cos(phi)))
        throw std::invalid_argument("collision_pair: s must lie in [1e-3, 2 cos(pi/beta))");
    const Complex z1 = Complex(1.0) - s * std::exp(Complex(0.0, -phi));
    return {z1, std::conj(z1)};
}

Complex eval_mapping(const HarmonicMapping& f, Complex z) {
    return eval(f.h, z) + std::conj(eval(f.g, z));
}

Complex dilatation(const HarmonicMapping& f, Complex z) {
    const Complex hp = eval(derivative(f.h), z);
    if (std::abs(hp) < 1e-15)
        throw std::domain_error("dilatation: h'(z) vanishes at the requested point");
    return eval(derivative(f.g), z) / hp;
}

double jacobian(const HarmonicMapping& f, Complex z) {
    const double hp = std::abs(eval(derivative(f.h), z));
    const double gp = std::abs(eval(derivative(f.g), z));
    return hp * hp - gp * gp;
}

double membership_max_re(const ComplexSeries& h, int radii, int angles, double max_radius) {
    if (radii < 1 || angles < 1) throw std::invalid_argument("membership_max_re: empty grid");
    if (!(max_radius > 0.0 && max_radius < 1.0))
        throw std::invalid_argument("membership_max_re: max_radius must lie in (0, 1)");
    const ComplexSeries hp = derivative(h);
    const ComplexSeries hpp = derivative(hp);
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= radii; ++i) {
        const double rho = max_radius * i / radii;
        for (int a = 0; a < angles; ++a) {
            const double theta = 2.0 * std::numbers::pi * a / angles;
            const Complex z = std::polar(rho, theta);
            const Complex val = Complex(1.0) + z * eval(hpp, z) / eval(hp, z);
            worst = std::max(worst, val.real());
        }
    }
    return worst;
}

}  // namespace qcharm
