#include "qcharm/radii.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qcharm/numerics.hpp"

namespace qcharm {

std::string to_string(EquationId id) {
    switch (id) {
        case EquationId::R1: return "R1";
        case EquationId::R2: return "R2";
        case EquationId::R3: return "R3";
        case EquationId::R4: return "R4";
        case EquationId::RC: return "RC";
    }
    return "Unknown";
}

nlohmann::json to_json(const RadiusReport& r) {
    nlohmann::json j{{"equation", to_string(r.id)},
                     {"root", r.root},
                     {"residual", r.residual},
                     {"bracket", {r.bracket.first, r.bracket.second}},
                     {"iterations", r.iterations},
                     {"scan_step", r.scan_step}};
    if (r.id == EquationId::RC) j["source"] = to_string(r.source);
    return j;
}

double radius_equation(EquationId id, double r) {
    const double log1mr = std::log1p(-r);
    switch (id) {
        case EquationId::R1: return 1.0 - 1.5 * r;
        case EquationId::R2: return 2.0 + 2.0 * log1mr + r * log1mr - r + r * r;
        case EquationId::R3: return 2.0 - 2.0 * r + r * log1mr;
        case EquationId::R4: return 2.0 - r + 2.0 * log1mr + r * r;
        case EquationId::RC: break;
    }
    throw std::invalid_argument("radius_equation: RC is not a single equation");
}

namespace {

constexpr double kScanStep = 1e-3;
constexpr double kBisectTol = 1e-13;

RadiusReport solve_single(EquationId id) {
    if (id == EquationId::R1) {
        // Root of the linear case is 2/3 by inspection; nothing to solve.
        return RadiusReport{id, id, 2.0 / 3.0, 0.0, {0.0, 1.0}, 0, 0.0};
    }
    const auto fn = [id](double r) { return radius_equation(id, r); };
    double lo = 0.0, hi = 0.0;
    double prev = kScanStep;
    double fprev = fn(prev);
    for (int k = 2; k * kScanStep < 1.0; ++k) {
        const double next = k * kScanStep;
        const double fnext = fn(next);
        if (fprev * fnext <= 0.0) {
            lo = prev;
            hi = next;
            break;
        }
        prev = next;
        fprev = fnext;
    }
    if (hi == 0.0)
        throw std::runtime_error("solve_radius: no sign change in (0,1) for " + to_string(id));
    const auto res = bisect(fn, make_bracket(fn, lo, hi), kBisectTol);
    return RadiusReport{id, id, res.root, res.residual, {lo, hi}, res.iterations, kScanStep};
}

}  // namespace

RadiusReport solve_radius(EquationId id) {
    if (id != EquationId::RC) return solve_single(id);
    RadiusReport best = solve_single(EquationId::R1);
    for (EquationId e : {EquationId::R2, EquationId::R3, EquationId::R4}) {
        RadiusReport r = solve_single(e);
        if (r.root < best.root) best = r;
    }
    best.source = best.id;
    best.id = EquationId::RC;
    return best;
}

double radius_cc() { return solve_radius(EquationId::RC).root; }

PartialSum partial_sum(const HarmonicMapping& f, int m, int l) {
    if (m < 1) throw std::invalid_argument("partial_sum: m must be >= 1");
    if (l < 2) throw std::invalid_argument("partial_sum: l must be >= 2");
    if (m > f.h.order()) throw std::invalid_argument("partial_sum: m exceeds stored h order");
    if (l > f.g.order()) throw std::invalid_argument("partial_sum: l exceeds stored g order");
    return PartialSum{m, l, f};
}

Complex eval_gamma_deriv(const PartialSum& p, Complex epsilon, Complex z) {
    if (std::fabs(std::abs(epsilon) - 1.0) > 1e-12)
        throw std::invalid_argument("eval_gamma_deriv: epsilon must be unimodular");
    if (std::abs(z) >= 1.0) throw std::domain_error("eval_gamma_deriv: |z| must be < 1");
    Complex a(0.0);
    for (int k = p.m; k >= 1; --k) a = a * z + static_cast<double>(k) * p.base.h.coeff(k);
    Complex b(0.0);
    for (int k = p.l; k >= 2; --k) b = b * z + static_cast<double>(k) * p.base.g.coeff(k);
    b *= z;  // lowest co-analytic derivative term is 2 b_2 z
    return a + epsilon * b;
}

BoundReport verify_cc_radius(const HarmonicMapping& f, int m, int l, double r, int angles,
                             int eps_samples) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("verify_cc_radius: r in (0,1)");
    if (angles < 1 || eps_samples < 1)
        throw std::invalid_argument("verify_cc_radius: empty sampling grid");
    const PartialSum p = partial_sum(f, m, l);
    constexpr int kRadii = 32;

    std::vector<Complex> eps(static_cast<size_t>(eps_samples));
    for (int e = 0; e < eps_samples; ++e)
        eps[static_cast<size_t>(e)] = std::polar(1.0, 2.0 * std::numbers::pi * e / eps_samples);

    double min_re = std::numeric_limits<double>::infinity();
    Complex witness_z(0.0), witness_eps(1.0);
    for (int i = 1; i <= kRadii; ++i) {
        const double rho = r * i / kRadii;
        for (int a = 0; a < angles; ++a) {
            const Complex z = std::polar(rho, 2.0 * std::numbers::pi * a / angles);
            // Gamma' = A + eps B; sweep eps over the unit roots.
            Complex A(0.0);
            for (int k = p.m; k >= 1; --k) A = A * z + static_cast<double>(k) * p.base.h.coeff(k);
            Complex B(0.0);
            for (int k = p.l; k >= 2; --k) B = B * z + static_cast<double>(k) * p.base.g.coeff(k);
            B *= z;
            for (const Complex& e : eps) {
                const double v = (A + e * B).real();
                if (v < min_re) {
                    min_re = v;
                    witness_z = z;
                    witness_eps = e;
                }
            }
        }
    }
    BoundReport report = make_lower_report(
        BoundId::PartialSumRe,
        {{"m", m},
         {"l", l},
         {"r", r},
         {"angles", angles},
         {"eps_samples", eps_samples},
         {"radii", kRadii},
         {"witness_z", {witness_z.real(), witness_z.imag()}},
         {"witness_eps", {witness_eps.real(), witness_eps.imag()}}},
        0.0, min_re);
    report.satisfied = min_re > 0.0;  // strict positivity, no slack
    return report;
}

double tail_bound_delta(int n, double r) {
    if (n < 2) throw std::invalid_argument("tail_bound_delta: n must be >= 2");
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("tail_bound_delta: r in [0,1)");
    double acc = -std::log1p(-r);
    double rk = 1.0;
    for (int k = 1; k <= n - 1; ++k) {
        rk *= r;
        acc -= rk / k;
    }
    return acc;
}

}  // namespace qcharm
