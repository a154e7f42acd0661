#pragma once

#include <map>

#include "slicekit/calculus.hpp"

namespace slicekit {

// a_P = E[(D_P h) Psi_P] / Pr[Psi_P != 0]; satisfies E_J(D_P h) = a_P Psi_P
// for J = [n] minus the endpoints of P.
Rat coefficient_a(const SliceFunction& h, const KTuple& P);

// One round of the approximation algorithm: round every shifted sorted
// coefficient a_P to the 2^-l grid and realize the rounded derivatives.
SliceFunction eating_step(const SliceFunction& h, int l);

struct ApproximationResult {
    SliceFunction g;
    std::vector<SliceFunction> per_level;  // g_k, ..., g_0
    Rat distance;                          // Pr[f != g]
    Rat residual_norm_sq;                  // ||f - g||^2
    bool is_boolean = false;
    // per level l: P -> (a_P, c_P)
    std::vector<std::map<KTuple, std::pair<Rat, Rat>>> per_level_coefficients;
};

ApproximationResult approximate(const SliceFunction& f, int k);

struct SupportBound {
    long support = 0;
    Int bound;
    bool holds = false;
};

// For integer-valued f of degree <= k: f == 0 or |supp f| >= C(n-2k, ell-k).
SupportBound support_bound_check(const SliceFunction& f, int k);

struct MartingaleReport {
    Rat v_I;
    Rat v_J;
    Rat step_norm_sq;      // ||E_J f - E_I f||^2
    Rat derivative_bound;  // average over j in I of ||D_ij f||^2; the
                           // inequality asserts step <= 4 * this (the factor 4
                           // absorbs the 1/2 normalization in D_ij)
    bool identity_holds = false;
    bool inequality_holds = false;
};

MartingaleReport martingale_check(const SliceFunction& f, const std::vector<int>& I, int i);

struct DichotomyReport {
    Rat high_weight;  // ||f^{>k}||^2
    Rat total_norm;   // ||f||^2
    bool exact_case_checked = false;  // true when the constant-free case applies
    bool exact_case_holds = false;
};

DichotomyReport dichotomy_report(const SliceFunction& f, int k);

}  // namespace slicekit
