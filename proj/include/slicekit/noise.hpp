#pragma once

#include <optional>
#include <vector>

#include "slicekit/harmonic.hpp"

namespace slicekit {

struct NoiseParams {
    double t = 0.0;
    std::optional<double> rho_estimate;  // user-supplied, diagnostics only
};

// L(f) = f - sum_{i<j} f^{(ij)} / C(n,2); exact.
SliceFunction laplacian(const SliceFunction& f);

// Eigenvalue of L on level d: (2/(n-1)) (d - d(d-1)/n).
Rat laplacian_eigenvalue(int n, int d);

// alpha = exp(-2t/(n-1)).
double noise_alpha(int n, double t);

// Multiplier alpha^{d - d(d-1)/n} applied to level d by H_t.
double noise_level_multiplier(int n, double t, int d);

// H_t f, evaluated in floating point from the exact level parts.
std::vector<double> noise(const SliceFunction& f, const NoiseParams& params);

// Exact companion: scale level d by multipliers[d].
SliceFunction apply_level_multipliers(const SliceFunction& f, const std::vector<Rat>& multipliers);

struct SplitLevelsGap {
    double lhs = 0.0;  // ||f||^2
    double rhs = 0.0;  // ||f^{>k}||^2 + exp(4tk(n-k+1)/(n(n-1))) ||H_t f||^2
};

SplitLevelsGap split_levels_gap(const SliceFunction& f, int k, double t);

struct HypergeometricTail {
    Rat exact_tail;
    double bound = 0.0;  // exp(-t^2 / 2)
};

// Pr[sum_{i in S} x_i <= p s - sqrt(p(1-p)s) t] for |S| = s, against the
// sub-Gaussian bound. The real threshold is evaluated in double with a
// 1e-9 inclusion slack so that exact boundary cases land inside the event.
HypergeometricTail hypergeometric_tail(int n, int ell, int s, double t);

// E[f^8] / E[f^2]^4, exact; diagnostic only.
Rat moment_ratio(const SliceFunction& f);

struct LevelKDiagnostic {
    Rat eps;                // E[f]
    Rat low_weight_exact;   // ||f^{<=k}||^2
    double chain_bound = 0.0;  // alpha^{-2k} ||H_t f||^2 at the supplied t
    double t = 0.0;
};

LevelKDiagnostic level_k_diagnostic(const SliceFunction& f, int k, double t);

}  // namespace slicekit
