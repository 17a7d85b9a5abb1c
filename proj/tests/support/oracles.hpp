// Test-only oracles, kept independent of the library code paths they check:
// brute-force convolution, Fourier coefficient extraction from a closed-form
// function, binomial series by multiplicative recurrence, and polar-grid
// Jacobian quadrature for areas.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "qcharm/mapping.hpp"

namespace oracles {

using qcharm::Complex;

// Plain O(n^2) convolution truncated at `order`.
inline std::vector<Complex> naive_convolution(const std::vector<Complex>& a,
                                              const std::vector<Complex>& b, int order) {
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (i + j <= static_cast<size_t>(order)) c[i + j] += a[i] * b[j];
    return c;
}

// Taylor coefficients of an analytic function by the Cauchy integral,
// discretized as a Riemann sum on |z| = rho.  Error decays like rho^samples.
inline std::vector<Complex> fourier_coeffs(const std::function<Complex(Complex)>& f, int count,
                                           double rho = 0.5, int samples = 512) {
    std::vector<Complex> out(static_cast<size_t>(count), Complex(0.0));
    for (int s = 0; s < samples; ++s) {
        const double theta = 2.0 * std::numbers::pi * s / samples;
        const Complex z = std::polar(rho, theta);
        const Complex v = f(z);
        for (int k = 0; k < count; ++k)
            out[static_cast<size_t>(k)] += v * std::polar(std::pow(rho, -k), -k * theta);
    }
    for (auto& c : out) c /= static_cast<double>(samples);
    return out;
}

// Coefficients of (1 - u)^e in powers of u: c_k = C(e, k) (-1)^k.
inline std::vector<double> binomial_one_minus(double e, int count) {
    std::vector<double> c(static_cast<size_t>(count));
    c[0] = 1.0;
    double binom = 1.0;
    for (int k = 1; k < count; ++k) {
        binom *= (e - (k - 1)) / k;
        c[static_cast<size_t>(k)] = binom * ((k % 2 == 0) ? 1.0 : -1.0);
    }
    return c;
}

// Midpoint quadrature of the Jacobian |h'|^2 - |g'|^2 over the disk of
// radius r in polar coordinates, nr x nt grid.
inline double area_by_quadrature(const qcharm::HarmonicMapping& f, double r, int nr, int nt) {
    const qcharm::ComplexSeries hp = qcharm::derivative(f.h);
    const qcharm::ComplexSeries gp = qcharm::derivative(f.g);
    const double dr = r / nr;
    const double dt = 2.0 * std::numbers::pi / nt;
    double acc = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double rho = (i + 0.5) * dr;
        double ring = 0.0;
        for (int j = 0; j < nt; ++j) {
            const Complex z = std::polar(rho, (j + 0.5) * dt);
            ring += std::norm(qcharm::eval(hp, z)) - std::norm(qcharm::eval(gp, z));
        }
        acc += ring * rho;
    }
    return acc * dr * dt;
}

}  // namespace oracles
