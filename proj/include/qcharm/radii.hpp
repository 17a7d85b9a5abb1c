// Radii of close-to-convexity for partial sums S_{m,l}(f) of mappings in
// F(alpha, lambda).  Four transcendental equations, one per (m, l) split of
// the positivity argument, certify Re(Gamma'_{m,l}) > 0 up to their least
// positive roots; the family radius is the smallest of the four.

#pragma once

#include <utility>

#include "qcharm/bounds.hpp"
#include "qcharm/mapping.hpp"

namespace qcharm {

enum class EquationId { R1, R2, R3, R4, RC };

std::string to_string(EquationId id);

struct RadiusReport {
    EquationId id;
    // For RC, the equation whose root realizes the minimum (R2); otherwise == id.
    EquationId source;
    double root;
    double residual;
    std::pair<double, double> bracket;
    int iterations;
    double scan_step;
};

nlohmann::json to_json(const RadiusReport& r);

// Left side of the radius equation, positive below the root:
//   R1: 1 - (3/2) r                          (root 2/3, linear case m <= 2, l = 2)
//   R2: 2 + 2 ln(1-r) + r ln(1-r) - r + r^2  (m, l >= 3)
//   R3: 2 - 2r + r ln(1-r)                   (m <= 2, l >= 3)
//   R4: 2 - r + 2 ln(1-r) + r^2              (m >= 3, l = 2)
double radius_equation(EquationId id, double r);

// R1 returns 2/3 exactly (no solve).  The transcendental cases scan (0,1) in
// steps of 1e-3 for the first sign change, then bisect the bracket to 1e-13,
// giving the least positive root.  RC returns the minimum of the four.
RadiusReport solve_radius(EquationId id);

// min{r1, r2, r3, r4}; equals solve_radius(R2).root bit-for-bit.
double radius_cc();

// S_{m,l}(f) = sum_{k<=m} a_k z^k + conj(sum_{2<=k<=l} b_k z^k).
struct PartialSum {
    int m;  // analytic truncation degree, >= 1
    int l;  // co-analytic truncation degree, >= 2
    HarmonicMapping base;
};

PartialSum partial_sum(const HarmonicMapping& f, int m, int l);

// Derivative at z of the epsilon-combined polynomial
// Gamma_{m,l}(z) = sum_{k<=m} a_k z^k + eps sum_{2<=k<=l} b_k z^k, |eps| = 1.
Complex eval_gamma_deriv(const PartialSum& p, Complex epsilon, Complex z);

// Minimum of Re(Gamma'_{m,l}) over |z| <= r (32-radius x `angles` polar grid)
// and eps over `eps_samples` roots of unity.  A sampling check of the
// positivity criterion, not a certificate; the report records the minimum
// and whether it is strictly positive.
BoundReport verify_cc_radius(const HarmonicMapping& f, int m, int l, double r,
                             int angles = 128, int eps_samples = 64);

// Delta(n) = -ln(1-r) - sum_{k=1}^{n-1} r^k/k = sum_{k>=n} r^k/k, the tail
// majorant used by the positivity argument; equals r^n * lerch_phi(r, 1, n)
// and decreases in n.
double tail_bound_delta(int n, double r);

}  // namespace qcharm
