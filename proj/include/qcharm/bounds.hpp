// Closed-form bounds for the family F(alpha, lambda, n) — coefficient
// inequalities, Fekete-Szego functionals, distortion, growth and area
// envelopes — plus verifiers that measure a concrete mapping against them.
//
// Verifiers return BoundReports.  A report compares a measured quantity with
// a bound value, with absolute slack 1e-9 absorbing truncation and rounding.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcharm/mapping.hpp"

namespace qcharm {

enum class BoundId {
    CoeffA,
    CoeffB,
    FeketeSzegoG,
    FeketeSzegoF,
    GrowthLower,
    GrowthUpper,
    AreaLower,
    AreaUpper,
    DistortLower,
    DistortUpper,
    TailDeriv,
    PartialSumRe,
};

std::string to_string(BoundId id);

// Comparison slack shared by all bound verifiers.
inline constexpr double kBoundSlack = 1e-9;

struct BoundReport {
    BoundId id;
    nlohmann::json params;  // free-form record of the inputs that produced the numbers
    double bound;
    std::optional<double> measured;
    std::optional<bool> satisfied;
    std::optional<double> margin;  // bound - measured for upper bounds, mirrored for lower
};

void to_json(nlohmann::json& j, const BoundReport& r);

BoundReport make_upper_report(BoundId id, nlohmann::json params, double bound, double measured);
BoundReport make_lower_report(BoundId id, nlohmann::json params, double bound, double measured);

// |a_k| <= 2(alpha-1)/((k-1)k), k >= 2.
double coeff_bound_a(int k, double alpha);

// k = 1: |b_{n+1}| <= |lambda|/(n+1).
// k >= 2: |b_{k+n}| <= 2|lambda|(alpha-1)/((k-1)k(k+n)), computed as
// |lambda| k coeff_bound_a(k)/(k+n) so the algebraic identity with the
// coupling recurrence holds bit-for-bit.
double coeff_bound_b(int k, int n, double alpha, double lambda_abs);

// Sharp bound on |a_3 - delta a_2^2| over G(alpha):
// (alpha-1)/3 * max(1, |3 delta (alpha-1) + 3 - 2 alpha|).
double fekete_szego_G(double alpha, double delta);

// Bound on |b_3 - delta b_2^2| over F(alpha, lambda):
// 2(alpha-1)|lambda|/3 + |delta||lambda|^2/4.
double fekete_szego_F(double alpha, double lambda_abs, double delta_abs);

// 1 - r <= |h'(z)| <= 1 + r on |z| = r, for h in G(3/2).
std::pair<double, double> distortion_interval(double r);

// |z h''(z)/h'(z)| <= r/(1-r) on |z| = r, for h in G(3/2).
double pre_schwarz_deriv_bound(double r);

// Lerch transcendent sum_{k>=0} z^k/(k+a)^s, summed until the next term
// drops below 1e-16 of the accumulated value.
double lerch_phi(double z_abs, double s, double a);

// |f(z)| envelope on |z| = r:
//   r [ |lambda| (r/(n+2) -+ 1/(n+1)) r^n -+ r/2 + 1 ].
std::pair<double, double> growth_interval(const ClassParams& params, double r);

// Area envelope 2 pi int_0^r (1 - |lambda|^2 x^{2n}) (1 -+ x)^2 x dx,
// by exact polynomial integration.
std::pair<double, double> area_interval(const ClassParams& params, double r);

// Exact area of f(D_r) for a truncated mapping via the coefficient identity
//   intint_{D_r} |z|^{2p} |h'|^2 dA = pi sum_m |c_m|^2 r^{2(m+p+1)}/(m+p+1),
// applied with p = 0 and p = n (members), or to h' and g' separately.
double area_exact(const HarmonicMapping& f, double r);

// ---- Verifiers -----------------------------------------------------------
// Each samples/measures the mapping and reports the worst case found.
// They require f.params unless noted.

BoundReport check_coeff_a(const HarmonicMapping& f);
BoundReport check_coeff_b(const HarmonicMapping& f);

// Requires n == 1 (the functional bound covers F(alpha, lambda) only).
BoundReport check_fekete_szego(const HarmonicMapping& f, double delta);

// Samples |f| on the circle |z| = r.
std::pair<BoundReport, BoundReport> check_growth(const HarmonicMapping& f, double r,
                                                 int angles = 64);

std::pair<BoundReport, BoundReport> check_area(const HarmonicMapping& f, double r);

// Samples |h'| on the circle |z| = r.
std::pair<BoundReport, BoundReport> check_distortion(const HarmonicMapping& f, double r,
                                                     int angles = 64);

// Max of |d/dz sum_{k>split} a_k z^k| on |z| = r against r^split * phi(r,1,split).
BoundReport check_tail_deriv(const HarmonicMapping& f, int split, double r, int angles = 64);

}  // namespace qcharm
