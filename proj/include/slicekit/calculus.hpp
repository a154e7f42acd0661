#pragma once

#include <map>

#include "slicekit/harmonic.hpp"
#include "slicekit/tuples.hpp"

namespace slicekit {

// D_P f = E over subsets T of P of (-1)^|T| f^T; for a single pair,
// (f - f^{(ij)}) / 2.
SliceFunction derivative(const SliceFunction& f, const KTuple& P);
SliceFunction derivative(const SliceFunction& f, int i, int j);

// The scalar t with g = t * Psi_P. Throws if g is not an exact multiple.
Rat extract_multiple(const SliceFunction& g, const KTuple& P);

// Map from shifted sorted l-tuples to the prescribed multiple of Psi;
// values must lie in 2^{-l} Z.
struct DerivativeAssignment {
    int level = 0;
    std::map<KTuple, Rat> entries;
};

// The degree <= l function f with D_P f = z(P) Psi_P for every shifted
// sorted l-tuple P, built by the triangular sweep over the lexicographic
// order.
SliceFunction build_from_derivatives(DomainPtr d, const DerivativeAssignment& z);

}  // namespace slicekit
