#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qcharm/series.hpp"
#include "support/oracles.hpp"

using namespace qcharm;

namespace {

ComplexSeries geometric(int order) {
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(1.0));
    return ComplexSeries(std::move(c));
}

ComplexSeries one_minus_z(int order) {
    return sub(ComplexSeries::constant(Complex(1.0), order), ComplexSeries::monomial(Complex(1.0), 1, order));
}

ComplexSeries random_series(std::mt19937& rng, int order, bool zero_constant = false) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(static_cast<size_t>(order) + 1);
    for (auto& x : c) x = Complex(u(rng), u(rng));
    if (zero_constant) c[0] = Complex(0.0);
    return ComplexSeries(std::move(c));
}

void check_close(const ComplexSeries& a, const ComplexSeries& b, double tol) {
    REQUIRE(a.order() == b.order());
    for (int k = 0; k <= a.order(); ++k) {
        const double scale = 1.0 + std::abs(a.coeff(k)) + std::abs(b.coeff(k));
        CHECK(std::abs(a.coeff(k) - b.coeff(k)) <= tol * scale);
    }
}

}  // namespace

TEST_CASE("construction invariants") {
    ComplexSeries s(4);
    CHECK(s.order() == 4);
    CHECK(s.coeffs().size() == 5);
    CHECK(s.coeff(7) == Complex(0.0));  // beyond-order reads are zero
    CHECK_THROWS_AS(ComplexSeries(-1), std::invalid_argument);
    CHECK_THROWS_AS(ComplexSeries(std::vector<Complex>{}), std::invalid_argument);
    CHECK_THROWS_AS(s.coeff(-1), std::invalid_argument);
    CHECK_THROWS_AS(s.truncated(5), std::invalid_argument);
    CHECK_THROWS_AS(s.extended(3), std::invalid_argument);
}

TEST_CASE("mul truncates to the smaller order") {
    // (1+z)(1-z) = 1 - z^2 at order 4
    const ComplexSeries a = add(ComplexSeries::constant(Complex(1.0), 4),
                                ComplexSeries::monomial(Complex(1.0), 1, 4));
    const ComplexSeries p = mul(a, one_minus_z(4));
    CHECK(p.order() == 4);
    CHECK(p.coeff(0) == Complex(1.0));
    CHECK(p.coeff(1) == Complex(0.0));
    CHECK(p.coeff(2) == Complex(-1.0));
    CHECK(p.coeff(3) == Complex(0.0));
    CHECK(p.coeff(4) == Complex(0.0));

    // z * z at order 1: the degree-2 term falls off the truncation
    const ComplexSeries z1 = ComplexSeries::monomial(Complex(1.0), 1, 1);
    const ComplexSeries zz = mul(z1, z1);
    CHECK(zz.order() == 1);
    CHECK(zz.coeff(0) == Complex(0.0));
    CHECK(zz.coeff(1) == Complex(0.0));

    // order mismatch resolves to the minimum
    CHECK(mul(geometric(8), one_minus_z(3)).order() == 3);
    CHECK(add(geometric(8), one_minus_z(3)).order() == 3);
}

TEST_CASE("geometric series telescopes against a brute-force convolution") {
    const ComplexSeries g = geometric(8);
    const ComplexSeries omz = one_minus_z(8);
    const ComplexSeries p = mul(g, omz);
    const std::vector<Complex> ga(g.coeffs().begin(), g.coeffs().end());
    const std::vector<Complex> oa(omz.coeffs().begin(), omz.coeffs().end());
    const std::vector<Complex> expect = oracles::naive_convolution(ga, oa, 8);
    for (int k = 0; k <= 8; ++k) CHECK(p.coeff(k) == expect[static_cast<size_t>(k)]);
    CHECK(p.coeff(0) == Complex(1.0));
    for (int k = 1; k <= 8; ++k) CHECK(p.coeff(k) == Complex(0.0));
}

TEST_CASE("derivative") {
    // z - z^2/2 -> 1 - z
    ComplexSeries h = sub(ComplexSeries::monomial(Complex(1.0), 1, 4),
                          ComplexSeries::monomial(Complex(0.5), 2, 4));
    const ComplexSeries hp = derivative(h);
    CHECK(hp.order() == 3);
    CHECK(hp.coeff(0) == Complex(1.0));
    CHECK(hp.coeff(1) == Complex(-1.0));
    CHECK(hp.coeff(2) == Complex(0.0));

    const ComplexSeries c = derivative(ComplexSeries::constant(Complex(1.0), 0));
    CHECK(c.order() == 0);
    CHECK(c.coeff(0) == Complex(0.0));

    const ComplexSeries z5 = derivative(ComplexSeries::monomial(Complex(0.2), 5, 5));
    CHECK(z5.order() == 4);
    CHECK(z5.coeff(4) == Complex(1.0));
}

TEST_CASE("antiderivative") {
    const ComplexSeries a = antiderivative(one_minus_z(1));  // 1 - z -> z - z^2/2
    CHECK(a.order() == 2);
    CHECK(a.coeff(0) == Complex(0.0));
    CHECK(a.coeff(1) == Complex(1.0));
    CHECK(a.coeff(2) == Complex(-0.5));

    const ComplexSeries zero = antiderivative(ComplexSeries::zero(3));
    for (int k = 0; k <= 4; ++k) CHECK(zero.coeff(k) == Complex(0.0));

    // (1/2) t (1 - t) integrates to z^2/4 - z^3/6
    const ComplexSeries integrand =
        scale(mul(ComplexSeries::monomial(Complex(1.0), 1, 3), one_minus_z(3)), Complex(0.5));
    const ComplexSeries g = antiderivative(integrand);
    CHECK(std::abs(g.coeff(2) - Complex(0.25)) == 0.0);
    CHECK(std::abs(g.coeff(3) - Complex(-1.0 / 6.0)) <= 1e-16);
    CHECK(g.coeff(1) == Complex(0.0));
}

TEST_CASE("exp and log") {
    // Mercator series: log(1-z) = -z - z^2/2 - z^3/3 - z^4/4
    const ComplexSeries l = log_series(one_minus_z(4));
    for (int k = 1; k <= 4; ++k) CHECK(std::abs(l.coeff(k) - Complex(-1.0 / k)) <= 1e-16);
    CHECK(l.coeff(0) == Complex(0.0));

    // round trip
    const ComplexSeries rt = exp_series(log_series(one_minus_z(6)));
    CHECK(std::abs(rt.coeff(0) - Complex(1.0)) <= 1e-15);
    CHECK(std::abs(rt.coeff(1) - Complex(-1.0)) <= 1e-15);
    for (int k = 2; k <= 6; ++k) CHECK(std::abs(rt.coeff(k)) <= 1e-15);

    const ComplexSeries e0 = exp_series(ComplexSeries::zero(5));
    CHECK(e0.coeff(0) == Complex(1.0));
    for (int k = 1; k <= 5; ++k) CHECK(e0.coeff(k) == Complex(0.0));

    CHECK_THROWS_AS(log_series(ComplexSeries::constant(Complex(2.0), 3)), std::domain_error);
    CHECK_THROWS_AS(log_series(ComplexSeries::zero(3)), std::domain_error);
}

TEST_CASE("eval") {
    const ComplexSeries h = sub(ComplexSeries::monomial(Complex(1.0), 1, 2),
                                ComplexSeries::monomial(Complex(0.5), 2, 2));
    CHECK(eval(h, Complex(0.5)) == Complex(3.0 / 8.0));
    CHECK(eval(h, Complex(0.0)) == h.coeff(0));

    // geometric series at 0.3: closed form 1/0.7 up to the truncation tail
    const double measured = eval(geometric(50), Complex(0.3)).real();
    const double tail = std::pow(0.3, 51) / 0.7;
    CHECK(std::fabs(measured - 1.0 / 0.7) <= tail + 1e-15);

    CHECK_THROWS_AS(eval(h, Complex(1.0)), std::domain_error);
    CHECK_THROWS_AS(eval(h, Complex(0.8, 0.7)), std::domain_error);
}

TEST_CASE("div inverts mul and rejects zero constant terms") {
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        const ComplexSeries a = random_series(rng, 12);
        // keep the divisor well conditioned: |b_0| >= 1
        const ComplexSeries b = add(random_series(rng, 12), ComplexSeries::constant(Complex(2.0), 12));
        check_close(div(mul(a, b), b), a, 1e-11);
    }
    CHECK_THROWS_AS(div(geometric(3), ComplexSeries::monomial(Complex(1.0), 1, 3)),
                    std::domain_error);
}

TEST_CASE("property: product rule") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        const ComplexSeries a = random_series(rng, 16);
        const ComplexSeries b = random_series(rng, 16);
        const ComplexSeries lhs = derivative(mul(a, b));
        const ComplexSeries rhs =
            add(mul(derivative(a), b), mul(a, derivative(b)));
        check_close(lhs, rhs, 1e-13);
    }
}

TEST_CASE("property: derivative undoes antiderivative") {
    // Exact as a series; each coefficient sees one divide and one multiply,
    // so allow a couple of ulps.
    std::mt19937 rng(13);
    for (int t = 0; t < 50; ++t) {
        const ComplexSeries a = random_series(rng, 64);
        const ComplexSeries round = derivative(antiderivative(a));
        REQUIRE(round.order() == a.order());
        for (int k = 0; k <= a.order(); ++k)
            CHECK(std::abs(round.coeff(k) - a.coeff(k)) <= 4e-16 * std::abs(a.coeff(k)));
    }
}

TEST_CASE("property: exp additivity") {
    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
        const ComplexSeries a = random_series(rng, 12, /*zero_constant=*/true);
        const ComplexSeries b = random_series(rng, 12, /*zero_constant=*/true);
        check_close(exp_series(add(a, b)), mul(exp_series(a), exp_series(b)), 1e-12);
    }
}

TEST_CASE("property: eval is linear") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    for (int t = 0; t < 50; ++t) {
        const ComplexSeries a = random_series(rng, 24);
        const ComplexSeries b = random_series(rng, 24);
        const Complex z(u(rng), u(rng));
        const Complex lhs = eval(add(a, b), z);
        const Complex rhs = eval(a, z) + eval(b, z);
        CHECK(std::abs(lhs - rhs) <= 1e-14 * (1.0 + std::abs(lhs)));
    }
}
