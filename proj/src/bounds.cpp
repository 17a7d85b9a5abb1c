#include "qcharm/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qcharm {

std::string to_string(BoundId id) {
    switch (id) {
        case BoundId::CoeffA: return "CoeffA";
        case BoundId::CoeffB: return "CoeffB";
        case BoundId::FeketeSzegoG: return "FeketeSzegoG";
        case BoundId::FeketeSzegoF: return "FeketeSzegoF";
        case BoundId::GrowthLower: return "GrowthLower";
        case BoundId::GrowthUpper: return "GrowthUpper";
        case BoundId::AreaLower: return "AreaLower";
        case BoundId::AreaUpper: return "AreaUpper";
        case BoundId::DistortLower: return "DistortLower";
        case BoundId::DistortUpper: return "DistortUpper";
        case BoundId::TailDeriv: return "TailDeriv";
        case BoundId::PartialSumRe: return "PartialSumRe";
    }
    return "Unknown";
}

void to_json(nlohmann::json& j, const BoundReport& r) {
    j = nlohmann::json{{"bound_id", to_string(r.id)},
                       {"params", r.params},
                       {"bound", r.bound},
                       {"measured", nullptr},
                       {"satisfied", nullptr},
                       {"margin", nullptr}};
    if (r.measured) j["measured"] = *r.measured;
    if (r.satisfied) j["satisfied"] = *r.satisfied;
    if (r.margin) j["margin"] = *r.margin;
}

BoundReport make_upper_report(BoundId id, nlohmann::json params, double bound, double measured) {
    const double margin = bound - measured;
    return BoundReport{id, std::move(params), bound, measured, margin >= -kBoundSlack, margin};
}

BoundReport make_lower_report(BoundId id, nlohmann::json params, double bound, double measured) {
    const double margin = measured - bound;
    return BoundReport{id, std::move(params), bound, measured, margin >= -kBoundSlack, margin};
}

double coeff_bound_a(int k, double alpha) {
    if (k < 2) throw std::invalid_argument("coeff_bound_a: k must be >= 2");
    if (!(alpha > 1.0 && alpha <= 1.5))
        throw std::invalid_argument("coeff_bound_a: alpha must lie in (1, 3/2]");
    return 2.0 * (alpha - 1.0) / (static_cast<double>(k - 1) * k);
}

double coeff_bound_b(int k, int n, double alpha, double lambda_abs) {
    if (k < 1) throw std::invalid_argument("coeff_bound_b: k must be >= 1");
    if (n < 1) throw std::invalid_argument("coeff_bound_b: n must be >= 1");
    if (k == 1) return lambda_abs / (n + 1);
    return lambda_abs * k * coeff_bound_a(k, alpha) / (k + n);
}

double fekete_szego_G(double alpha, double delta) {
    if (!(alpha > 1.0 && alpha <= 1.5))
        throw std::invalid_argument("fekete_szego_G: alpha must lie in (1, 3/2]");
    // (alpha-1)/3 * max(1, |v|) with v the Schwarz-coefficient weight; the
    // first branch takes over when |delta - (2 alpha - 3)/(3(alpha-1))| is at
    // least 1/(3(alpha-1)), and the two branches agree on the boundary.
    const double v = 3.0 * delta * (alpha - 1.0) + 3.0 - 2.0 * alpha;
    return (alpha - 1.0) / 3.0 * std::max(1.0, std::fabs(v));
}

double fekete_szego_F(double alpha, double lambda_abs, double delta_abs) {
    if (!(alpha > 1.0 && alpha <= 1.5))
        throw std::invalid_argument("fekete_szego_F: alpha must lie in (1, 3/2]");
    return 2.0 * (alpha - 1.0) * lambda_abs / 3.0 + delta_abs * lambda_abs * lambda_abs / 4.0;
}

std::pair<double, double> distortion_interval(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("distortion_interval: r in [0,1)");
    return {1.0 - r, 1.0 + r};
}

double pre_schwarz_deriv_bound(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("pre_schwarz_deriv_bound: r in [0,1)");
    return r / (1.0 - r);
}

double lerch_phi(double z_abs, double s, double a) {
    if (!(z_abs >= 0.0 && z_abs < 1.0)) throw std::invalid_argument("lerch_phi: |z| in [0,1)");
    if (!(a > 0.0)) throw std::invalid_argument("lerch_phi: a must be > 0");
    double acc = std::pow(a, -s);
    double zk = 1.0;
    for (long k = 1; k < 100000000L; ++k) {
        zk *= z_abs;
        const double term = zk * std::pow(static_cast<double>(k) + a, -s);
        acc += term;
        if (term < 1e-16 * acc) return acc;
    }
    throw std::runtime_error("lerch_phi: series did not converge");
}

std::pair<double, double> growth_interval(const ClassParams& params, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("growth_interval: r in [0,1)");
    const double la = std::abs(params.lambda);
    const double rn = std::pow(r, params.n);
    const double lower = r * (la * (r / (params.n + 2) - 1.0 / (params.n + 1)) * rn - r / 2.0 + 1.0);
    const double upper = r * (la * (r / (params.n + 2) + 1.0 / (params.n + 1)) * rn + r / 2.0 + 1.0);
    return {lower, upper};
}

std::pair<double, double> area_interval(const ClassParams& params, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("area_interval: r in (0,1)");
    const double L = std::norm(params.lambda);
    const int n = params.n;
    // int_0^r (1 - L x^{2n}) (1 -+ x)^2 x dx, integrated term by term.
    const auto endpoint = [&](double sign) {
        const double base = r * r / 2.0 + sign * 2.0 * r * r * r / 3.0 + r * r * r * r / 4.0;
        const double p = std::pow(r, 2 * n);
        const double tail = p * (r * r / (2 * n + 2) + sign * 2.0 * r * r * r / (2 * n + 3) +
                                 r * r * r * r / (2 * n + 4));
        return 2.0 * std::numbers::pi * (base - L * tail);
    };
    return {endpoint(-1.0), endpoint(+1.0)};
}

namespace {

// pi sum_m |c_m|^2 r^{2(m+p+1)} / (m+p+1) for the series d = sum c_m z^m.
double disk_moment(const ComplexSeries& d, double r, int p) {
    double acc = 0.0;
    const double r2 = r * r;
    double rpow = std::pow(r, 2 * (p + 1));
    for (int m = 0; m <= d.order(); ++m) {
        acc += std::norm(d.coeff(m)) * rpow / (m + p + 1);
        rpow *= r2;
    }
    return std::numbers::pi * acc;
}

const ClassParams& require_params(const HarmonicMapping& f, const char* who) {
    if (!f.params) throw std::invalid_argument(std::string(who) + ": mapping has no parameters");
    return *f.params;
}

}  // namespace

double area_exact(const HarmonicMapping& f, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("area_exact: r in (0,1)");
    const ComplexSeries hp = derivative(f.h);
    if (f.params) {
        // Jacobian factors as (1 - |lambda|^2 |z|^{2n}) |h'|^2 for members.
        const double L = std::norm(f.params->lambda);
        return disk_moment(hp, r, 0) - L * disk_moment(hp, r, f.params->n);
    }
    return disk_moment(hp, r, 0) - disk_moment(derivative(f.g), r, 0);
}

BoundReport check_coeff_a(const HarmonicMapping& f) {
    const ClassParams& p = require_params(f, "check_coeff_a");
    int worst_k = 2;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (int k = 2; k <= f.h.order(); ++k) {
        const double margin = coeff_bound_a(k, p.alpha) - std::abs(f.h.coeff(k));
        if (margin < worst_margin) {
            worst_margin = margin;
            worst_k = k;
        }
    }
    return make_upper_report(BoundId::CoeffA, {{"k", worst_k}, {"alpha", p.alpha}},
                             coeff_bound_a(worst_k, p.alpha), std::abs(f.h.coeff(worst_k)));
}

BoundReport check_coeff_b(const HarmonicMapping& f) {
    const ClassParams& p = require_params(f, "check_coeff_b");
    const double la = std::abs(p.lambda);
    int worst_j = p.n + 1;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (int j = p.n + 1; j <= f.g.order(); ++j) {
        const double margin = coeff_bound_b(j - p.n, p.n, p.alpha, la) - std::abs(f.g.coeff(j));
        if (margin < worst_margin) {
            worst_margin = margin;
            worst_j = j;
        }
    }
    return make_upper_report(
        BoundId::CoeffB, {{"k", worst_j - p.n}, {"n", p.n}, {"alpha", p.alpha}, {"lambda_abs", la}},
        coeff_bound_b(worst_j - p.n, p.n, p.alpha, la), std::abs(f.g.coeff(worst_j)));
}

BoundReport check_fekete_szego(const HarmonicMapping& f, double delta) {
    const ClassParams& p = require_params(f, "check_fekete_szego");
    if (p.n != 1)
        throw std::invalid_argument("check_fekete_szego: functional bound applies to n = 1 only");
    const Complex b2 = f.g.coeff(2);
    const Complex b3 = f.g.coeff(3);
    const double measured = std::abs(b3 - delta * b2 * b2);
    return make_upper_report(BoundId::FeketeSzegoF,
                             {{"delta", delta}, {"alpha", p.alpha}, {"lambda_abs", std::abs(p.lambda)}},
                             fekete_szego_F(p.alpha, std::abs(p.lambda), std::fabs(delta)), measured);
}

std::pair<BoundReport, BoundReport> check_growth(const HarmonicMapping& f, double r, int angles) {
    const ClassParams& p = require_params(f, "check_growth");
    const auto [lower, upper] = growth_interval(p, r);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int a = 0; a < angles; ++a) {
        const double v = std::abs(eval_mapping(f, std::polar(r, 2.0 * std::numbers::pi * a / angles)));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    nlohmann::json params{{"r", r}, {"angles", angles}};
    return {make_lower_report(BoundId::GrowthLower, params, lower, lo),
            make_upper_report(BoundId::GrowthUpper, params, upper, hi)};
}

std::pair<BoundReport, BoundReport> check_area(const HarmonicMapping& f, double r) {
    const ClassParams& p = require_params(f, "check_area");
    const auto [lower, upper] = area_interval(p, r);
    const double measured = area_exact(f, r);
    nlohmann::json params{{"r", r}};
    return {make_lower_report(BoundId::AreaLower, params, lower, measured),
            make_upper_report(BoundId::AreaUpper, params, upper, measured)};
}

std::pair<BoundReport, BoundReport> check_distortion(const HarmonicMapping& f, double r, int angles) {
    require_params(f, "check_distortion");
    const auto [lower, upper] = distortion_interval(r);
    const ComplexSeries hp = derivative(f.h);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int a = 0; a < angles; ++a) {
        const double v = std::abs(eval(hp, std::polar(r, 2.0 * std::numbers::pi * a / angles)));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    nlohmann::json params{{"r", r}, {"angles", angles}};
    return {make_lower_report(BoundId::DistortLower, params, lower, lo),
            make_upper_report(BoundId::DistortUpper, params, upper, hi)};
}

BoundReport check_tail_deriv(const HarmonicMapping& f, int split, double r, int angles) {
    if (split < 1) throw std::invalid_argument("check_tail_deriv: split must be >= 1");
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("check_tail_deriv: r in [0,1)");
    // Tail sum_{k > split} a_k z^k of the analytic part, differentiated.
    ComplexSeries tail = f.h;
    {
        std::vector<Complex> c(tail.coeffs().begin(), tail.coeffs().end());
        for (int k = 0; k <= split && k < static_cast<int>(c.size()); ++k) c[static_cast<size_t>(k)] = 0.0;
        tail = ComplexSeries(std::move(c));
    }
    const ComplexSeries tp = derivative(tail);
    double measured = 0.0;
    for (int a = 0; a < angles; ++a)
        measured = std::max(measured,
                            std::abs(eval(tp, std::polar(r, 2.0 * std::numbers::pi * a / angles))));
    const double bound = std::pow(r, split) * lerch_phi(r, 1.0, split);
    return make_upper_report(BoundId::TailDeriv, {{"split", split}, {"r", r}, {"angles", angles}},
                             bound, measured);
}

}  // namespace qcharm
