#pragma once

#include <vector>

#include "slicekit/structure.hpp"

namespace slicekit {

constexpr int kDefaultCubeBudget = 20;

// Exact rational function on {0,1}^n; index mask m encodes the point with
// coordinate i equal to bit (i-1), same convention as the slice.
struct CubeFunction {
    int n = 0;
    std::vector<Rat> values;  // size 2^n

    CubeFunction() = default;
    CubeFunction(int n_, std::vector<Rat> v);
    explicit CubeFunction(int n_);  // zero function

    bool operator==(const CubeFunction& o) const { return n == o.n && values == o.values; }
};

struct FourierExpansion {
    int n = 0;
    std::vector<Rat> coefficients;  // indexed by subset mask S
};

// f_hat(S) = E[f * chi_S], chi_S(x) = prod_{i in S} (-1)^{x_i}; exact,
// via the Walsh-Hadamard transform.
FourierExpansion fourier_transform(const CubeFunction& f, int budget = kDefaultCubeBudget);

// Reconstruct values from coefficients (exact involution).
CubeFunction inverse_fourier(const FourierExpansion& e);

// sum over |S| > k of f_hat(S)^2.
Rat weight_above(const CubeFunction& f, int k);

Rat cube_expectation(const CubeFunction& f);
Rat cube_norm_sq(const CubeFunction& f);

// f'(x) = f(x restricted to the first n coordinates), on slice(m, m/2).
SliceFunction embed_to_slice(const CubeFunction& f, int m,
                             std::size_t budget = kDefaultBudget);

// g(z) = g'(z_1..z_n, 1-z_1..1-z_n, 0,1,0,1,...).
CubeFunction pullback_from_slice(const SliceFunction& g_prime, int n);

struct EmbeddingResult {
    CubeFunction g;
    Rat cube_distance;        // Pr_z[f != g]
    Rat slice_distance;       // Pr_x[f' != g'] on the slice
    bool invariant_outside = false;  // D_ij g' == 0 for all i, j outside [n]
    std::pair<int, int> offending_pair{0, 0};
};

// Embed, approximate with the slice algorithm, check invariance outside
// [n], and pull back.
EmbeddingResult ks_via_embedding(const CubeFunction& f, int k, int m);

// eps + eps^2 (2 ln(1/eps))^k / k!.
double sharp_bound(double eps, int k);

// alpha^2 (2e/k * ln(1/alpha))^k.
double cube_level_k_bound(double alpha, int k);

struct TightnessReport {
    CubeFunction f;
    CubeFunction g;      // the +-1-valued parity of the first k coordinates
    Rat delta;           // Pr[f != (1+g)/2]
    Rat eps;             // W^{>k}(f)
    Rat low_weight;      // W^{<=k}(f)
    double sharp = 0.0;  // sharp_bound(eps, k)
};

TightnessReport tightness_example(int n, int k, double t);

}  // namespace slicekit
