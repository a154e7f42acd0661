#pragma once

#include <vector>

#include "slicekit/domain.hpp"
#include "slicekit/linalg.hpp"
#include "slicekit/tuples.hpp"

namespace slicekit {

// AND_T = product of the coordinates in T.
SliceFunction and_function(DomainPtr d, const std::vector<int>& T);

// Psi_P(x) = prod over pairs (a,b) of (x_b - x_a). Pairs may be given in
// either orientation; the product is evaluated as written.
SliceFunction psi_function(DomainPtr d, const KTuple& P);

// chi_B = sum of Psi_P over all |B|-tuples with b-set B (a < b, endpoints
// distinct).
SliceFunction chi_function(DomainPtr d, const std::vector<int>& B);

struct LevelWeights {
    std::vector<Rat> weights;  // index d = 0..ell: ||f^{=d}||^2
};

struct LevelDecomposition {
    SliceFunction low;               // f^{<=k}
    SliceFunction high;              // f - f^{<=k}
    std::vector<SliceFunction> parts;  // parts[d] = f^{=d}, d = 0..ell
    LevelWeights weights;
    int degree = 0;                  // least k with f^{>k} = 0
};

// ||f^{<=k}||^2 without materializing the projection.
Rat low_weight(const SliceFunction& f, int k);

// The exact orthogonal projection of f onto span{ AND_T : |T| <= k }.
SliceFunction project_low(const SliceFunction& f, int k);

LevelDecomposition project_levels(const SliceFunction& f, int k);

int degree_of(const SliceFunction& f);

struct SpanDims {
    int dim_and = 0;
    int dim_psi = 0;
    bool mutual_containment = false;
};

// Ranks of { AND_T : |T| <= k } and { Psi_Q : |Q| <= k } as subspaces of
// functions on the slice, plus an exact mutual-containment check.
SpanDims span_dims_check(DomainPtr d, int k);

struct CompatibilityReport {
    bool holds = false;
    std::vector<Rat> lhs;  // per slice point
    std::vector<Rat> rhs;
};

// Pointwise identity between the sum of Psi_Q over all assignments of
// distinct a's outside T to the b's in T, and the closed hypergeometric
// form in X = sum of the coordinates of T.
CompatibilityReport compatibility_identity_check(DomainPtr d, const std::vector<int>& T);

// Closed form 2^k C(n-2k, ell-k) / C(n, ell).
Rat psi_support_probability(DomainPtr d, const KTuple& P);

}  // namespace slicekit
