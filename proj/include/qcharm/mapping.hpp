// Planar harmonic mappings f = h + conj(g) on the unit disk and the family
// F(alpha, lambda, n): analytic part h with Re(1 + z h''/h') < alpha, and
// co-analytic part coupled through g'(z) = lambda z^n h'(z).
//
// Mappings are built either by coupling a given analytic part or from a
// Schwarz function via the integral representation
//     h(z) = int_0^z exp( 2(1-alpha) int_0^zeta w(t)/(t(1-w(t))) dt ) dzeta.

#pragma once

#include <optional>
#include <utility>

#include "qcharm/series.hpp"

namespace qcharm {

// Parameters (alpha, lambda, n) of the family.  Construction validates
// 1 < alpha <= 3/2, |lambda| <= 1/(n+1), n >= 1.
struct ClassParams {
    ClassParams(double alpha, Complex lambda, int n);

    double alpha;
    Complex lambda;
    int n;
};

// Uniform dilatation bound k = sup |g'/h'| = |lambda| for family members.
double dilatation_bound(const ClassParams& p);
// Quasiconformality constant K = (1+k)/(1-k).
double qc_constant(const ClassParams& p);

// An analytic self-map w of the disk with w(0) = 0 and |w| < 1, stored as a
// polynomial (exact coefficients) plus a certified bound on sup |w|.
class SchwarzFunction {
public:
    // c * z^m.  sup|w| over the open disk equals |c|; |c| = 1 is admitted
    // since |c z^m| < 1 still holds strictly inside the disk for m >= 1.
    static SchwarzFunction monomial(Complex c, int m, int order = kDefaultOrder);
    // Free-form polynomial with a caller-certified sup bound; here the strict
    // inequality must come from the bound itself, so sup_bound < 1 is required.
    static SchwarzFunction from_series(ComplexSeries series, double sup_bound);

    const ComplexSeries& series() const { return series_; }
    double sup_bound() const { return sup_bound_; }

private:
    SchwarzFunction(ComplexSeries series, double sup_bound);

    ComplexSeries series_;
    double sup_bound_;
};

// f = h + conj(g).  params is absent for free-form mappings (for example the
// non-univalence example below, which has g = 0).
struct HarmonicMapping {
    ComplexSeries h;
    ComplexSeries g;
    std::optional<ClassParams> params;
};

// Throws std::invalid_argument on the first violated structural invariant:
// h normalized (a0 = 0, a1 = 1 within 1e-12), g(0) = 0, and for members the
// vanishing of b_1..b_n plus the coupling recurrence
// (k+n) b_{k+n} = lambda k a_k within 1e-12.
void validate_mapping(const HarmonicMapping& f);

// Builds g as the primitive of lambda z^n h'.  h must be normalized.
HarmonicMapping couple_g(const ComplexSeries& h, const ClassParams& params);

// Integral representation: h' = exp(2(1-alpha) * int w(t)/(t(1-w(t))) dt),
// then g by coupling.  Rejects sup_bound > 1 (pole of 1/(1-w)).
HarmonicMapping from_schwarz(const SchwarzFunction& w, const ClassParams& params,
                             int order = kDefaultOrder);

// Analytic part attaining the coefficient bound |a_k| = 2(alpha-1)/((k-1)k):
// the primitive of (1 - t^(k-1))^(2(alpha-1)/(k-1)).  Requires k >= 2.
ComplexSeries extremal_h(int k, double alpha, int order = kDefaultOrder);

// h_beta(z) = (1/beta)(1 - (1-z)^beta) for beta in (2,3): a normalized
// analytic function with Re(1 + z h''/h') < (1+beta)/2 that is not univalent.
ComplexSeries counterexample_h(double beta, int order = kDefaultOrder);

// Closed-form value of h_beta at z (principal branch), |z| < 1.  Exact to
// rounding, unlike truncated-series evaluation near the boundary.
Complex counterexample_value(double beta, Complex z);

// Two distinct points identified by h_beta: z1 = 1 - s e^{-i pi/beta} and
// z2 = conj(z1), so that arg(1 - z1) = -pi/beta kills Im h_beta and the real
// coefficients give h_beta(z1) = h_beta(z2).  Requires 1e-3 <= s and
// s < 2 cos(pi/beta) (which keeps |z1| < 1); s defaults to cos(pi/beta), the
// midpoint of the admissible interval.
std::pair<Complex, Complex> collision_pair(double beta, std::optional<double> s = std::nullopt);

// h(z) + conj(g(z)), |z| < 1.
Complex eval_mapping(const HarmonicMapping& f, Complex z);

// g'(z)/h'(z); equals lambda z^n for family members.  Throws when h'(z) is
// numerically zero (impossible for members, guarded anyway).
Complex dilatation(const HarmonicMapping& f, Complex z);

// |h'(z)|^2 - |g'(z)|^2.
double jacobian(const HarmonicMapping& f, Complex z);

// Max of Re(1 + z h''(z)/h'(z)) over a polar sampling grid; a necessary
// condition check for membership in G(alpha): the sampled max must stay
// below alpha.  Near max_radius the truncated series only approximates the
// function, so this is a diagnostic, not a certificate.
double membership_max_re(const ComplexSeries& h, int radii = 64, int angles = 256,
                         double max_radius = 0.99);

}  // namespace qcharm
