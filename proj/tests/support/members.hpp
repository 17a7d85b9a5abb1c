// Deterministic random family members for property suites: monomial Schwarz
// input c z^m with admissible (alpha, lambda, n).

#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qcharm/mapping.hpp"

namespace members {

struct MemberSpec {
    double alpha;
    qcharm::Complex lambda;
    int n;
    qcharm::Complex c;
    int m;
};

// fixed_n = 0 cycles n through 1, 2, 3.
inline std::vector<MemberSpec> random_member_specs(int count, unsigned seed, int fixed_n = 0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<MemberSpec> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int n = fixed_n > 0 ? fixed_n : 1 + i % 3;
        const double alpha = 1.0 + 0.5 * (1.0 - unit(rng));  // in (1, 3/2]
        const double lam_abs = unit(rng) / (n + 1);
        const qcharm::Complex lambda = std::polar(lam_abs, 2.0 * std::numbers::pi * unit(rng));
        const qcharm::Complex c = std::polar(unit(rng), 2.0 * std::numbers::pi * unit(rng));
        const int m = 1 + static_cast<int>(unit(rng) * 4.0) % 4;
        out.push_back(MemberSpec{alpha, lambda, n, c, m});
    }
    return out;
}

inline qcharm::HarmonicMapping make_member(const MemberSpec& s, int order = qcharm::kDefaultOrder) {
    return qcharm::from_schwarz(qcharm::SchwarzFunction::monomial(s.c, s.m, order),
                                qcharm::ClassParams(s.alpha, s.lambda, s.n), order);
}

}  // namespace members
