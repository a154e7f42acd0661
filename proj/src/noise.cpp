#include "slicekit/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace slicekit {

SliceFunction laplacian(const SliceFunction& f) {
    int n = f.domain->n();
    if (n < 2) throw std::invalid_argument("laplacian needs n >= 2");
    SliceFunction sum(f.domain);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) sum += apply_transposition(f, i, j);
    Rat pairs(static_cast<long>(n) * (n - 1) / 2);
    return f - (Rat(1) / pairs) * sum;
}

Rat laplacian_eigenvalue(int n, int d) {
    return make_rat(2, n - 1) * (Rat(d) - make_rat(static_cast<long>(d) * (d - 1), n));
}

double noise_alpha(int n, double t) { return std::exp(-2.0 * t / (n - 1)); }

double noise_level_multiplier(int n, double t, int d) {
    double expo = d - static_cast<double>(d) * (d - 1) / n;
    return std::pow(noise_alpha(n, t), expo);
}

std::vector<double> noise(const SliceFunction& f, const NoiseParams& params) {
    if (params.t < 0) throw std::invalid_argument("t must be nonnegative");
    auto dec = project_levels(f, f.domain->ell());
    std::vector<double> out(f.domain->size(), 0.0);
    for (int d = 0; d < static_cast<int>(dec.parts.size()); ++d) {
        double mult = noise_level_multiplier(f.domain->n(), params.t, d);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += mult * dec.parts[d].values[i].get_d();
    }
    return out;
}

SliceFunction apply_level_multipliers(const SliceFunction& f, const std::vector<Rat>& multipliers) {
    auto dec = project_levels(f, f.domain->ell());
    if (multipliers.size() < dec.parts.size())
        throw std::invalid_argument("need one multiplier per level 0..ell");
    SliceFunction out(f.domain);
    for (std::size_t d = 0; d < dec.parts.size(); ++d)
        out += multipliers[d] * dec.parts[d];
    return out;
}

SplitLevelsGap split_levels_gap(const SliceFunction& f, int k, double t) {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    int n = f.domain->n();
    auto dec = project_levels(f, std::min(k, f.domain->ell()));
    SplitLevelsGap g;
    g.lhs = norm_sq(f).get_d();
    double noisy = 0.0;
    for (int d = 0; d < static_cast<int>(dec.weights.weights.size()); ++d) {
        double mult = noise_level_multiplier(n, t, d);
        noisy += mult * mult * dec.weights.weights[d].get_d();
    }
    double high = norm_sq(dec.high).get_d();
    g.rhs = high + std::exp(4.0 * t * k * (n - k + 1) / (static_cast<double>(n) * (n - 1))) * noisy;
    return g;
}

HypergeometricTail hypergeometric_tail(int n, int ell, int s, double t) {
    if (n < 1 || ell < 0 || ell > n || s < 0 || s > n || t < 0)
        throw std::invalid_argument("parameter out of range");
    double p = static_cast<double>(ell) / n;
    double threshold = p * s - std::sqrt(p * (1 - p) * s) * t + 1e-9;
    HypergeometricTail out;
    out.exact_tail = 0;
    Int total = binomial(n, ell);
    for (int v = 0; v <= s; ++v) {
        if (v > threshold) break;
        out.exact_tail += Rat(binomial(s, v) * binomial(n - s, ell - v)) / Rat(total);
    }
    out.bound = std::exp(-t * t / 2.0);
    return out;
}

Rat moment_ratio(const SliceFunction& f) {
    if (f.is_zero()) throw std::invalid_argument("zero function");
    Rat m8(0), m2(0);
    for (const auto& v : f.values) {
        Rat v2 = v * v;
        Rat v4 = v2 * v2;
        m2 += v2;
        m8 += v4 * v4;
    }
    Rat total(static_cast<long>(f.values.size()));
    m2 /= total;
    m8 /= total;
    return m8 / (m2 * m2 * m2 * m2);
}

LevelKDiagnostic level_k_diagnostic(const SliceFunction& f, int k, double t) {
    for (const auto& v : f.values)
        if (v != 0 && v != 1) throw std::invalid_argument("f must be 0/1-valued");
    Rat eps = expectation(f);
    if (eps == 0) throw std::invalid_argument("E[f] must be positive");
    LevelKDiagnostic out;
    out.eps = eps;
    out.t = t;
    out.low_weight_exact = low_weight(f, k);
    int n = f.domain->n();
    auto dec = project_levels(f, std::min(k, f.domain->ell()));
    double noisy = 0.0;
    for (int d = 0; d < static_cast<int>(dec.weights.weights.size()); ++d) {
        double mult = noise_level_multiplier(n, t, d);
        noisy += mult * mult * dec.weights.weights[d].get_d();
    }
    double alpha = noise_alpha(n, t);
    out.chain_bound = std::pow(alpha, -2.0 * k) * noisy;
    return out;
}

}  // namespace slicekit
