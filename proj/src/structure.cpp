#include "slicekit/structure.hpp"

#include <stdexcept>

namespace slicekit {

Rat round_to_dyadic(const Rat& a, int l) {
    if (l < 0) throw std::invalid_argument("l must be nonnegative");
    Rat scaled = a;
    for (int i = 0; i < l; ++i) scaled *= 2;
    // Round scaled = p/q to the nearest integer, ties to even.
    Int p = scaled.get_num(), q = scaled.get_den();
    Int quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    Int twice_rem = 2 * rem;
    Int rounded = quot;
    if (twice_rem > q || (twice_rem == q && mpz_odd_p(quot.get_mpz_t())))
        rounded += 1;
    Rat out(rounded);
    for (int i = 0; i < l; ++i) out /= 2;
    return out;
}

Rat coefficient_a(const SliceFunction& h, const KTuple& P) {
    Rat support = psi_support_probability(h.domain, P);
    if (support == 0) throw std::invalid_argument("Psi_P vanishes on this slice");
    SliceFunction dh = derivative(h, P);
    SliceFunction psi = psi_function(h.domain, P);
    return inner_product(dh, psi) / support;
}

SliceFunction eating_step(const SliceFunction& h, int l) {
    if (2 * l > h.domain->n() || l > h.domain->ell())
        throw std::invalid_argument("level too large for this slice");
    DerivativeAssignment z;
    z.level = l;
    for (const auto& P : enumerate_shifted_sorted(h.domain->n(), l))
        z.entries[P] = round_to_dyadic(coefficient_a(h, P), l);
    return build_from_derivatives(h.domain, z);
}

ApproximationResult approximate(const SliceFunction& f, int k) {
    if (2 * k > f.domain->n() || k > f.domain->ell())
        throw std::invalid_argument("k too large for this slice");
    ApproximationResult out;
    out.g = SliceFunction(f.domain);
    SliceFunction h = f;  // h_{l+1} entering level l
    for (int l = k; l >= 0; --l) {
        std::map<KTuple, std::pair<Rat, Rat>> coeffs;
        DerivativeAssignment z;
        z.level = l;
        for (const auto& P : enumerate_shifted_sorted(f.domain->n(), l)) {
            Rat a = coefficient_a(h, P);
            Rat c = round_to_dyadic(a, l);
            coeffs[P] = {a, c};
            z.entries[P] = std::move(c);
        }
        SliceFunction g_l = build_from_derivatives(f.domain, z);
        h -= g_l;
        out.g += g_l;
        out.per_level.push_back(std::move(g_l));
        out.per_level_coefficients.push_back(std::move(coeffs));
    }
    long mismatches = 0;
    bool boolean = true;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (f.values[i] != out.g.values[i]) ++mismatches;
        if (out.g.values[i] * out.g.values[i] != out.g.values[i]) boolean = false;
    }
    out.distance = make_rat(mismatches, static_cast<long>(f.values.size()));
    out.residual_norm_sq = norm_sq(f - out.g);
    out.is_boolean = boolean;
    return out;
}

SupportBound support_bound_check(const SliceFunction& f, int k) {
    for (const auto& v : f.values)
        if (!is_integer(v)) throw std::invalid_argument("f must be integer-valued");
    if (degree_of(f) > k) throw std::invalid_argument("degree of f exceeds k");
    SupportBound out;
    for (const auto& v : f.values)
        if (v != 0) ++out.support;
    int n = f.domain->n(), ell = f.domain->ell();
    out.bound = (ell < k) ? Int(1) : binomial(n - 2 * k, ell - k);
    out.holds = (out.support == 0) || (out.support >= out.bound);
    return out;
}

MartingaleReport martingale_check(const SliceFunction& f, const std::vector<int>& I, int i) {
    check_coords(f.domain->n(), I);
    bool found = false;
    std::vector<int> J;
    for (int c : I) {
        if (c == i)
            found = true;
        else
            J.push_back(c);
    }
    if (!found) throw std::invalid_argument("i must belong to I");
    MartingaleReport rep;
    SliceFunction eI = average_over(f, I);
    SliceFunction eJ = average_over(f, J);
    rep.v_I = norm_sq(f - eI);
    rep.v_J = norm_sq(f - eJ);
    rep.step_norm_sq = norm_sq(eJ - eI);
    Rat acc(0);
    for (int j : I)
        if (j != i) acc += norm_sq(derivative(f, std::min(i, j), std::max(i, j)));
    rep.derivative_bound = acc / Rat(static_cast<long>(I.size()));
    rep.identity_holds = (rep.v_I == rep.v_J + rep.step_norm_sq);
    // E_J f - E_I f = 2 E_J(avg_j D_ij f) because D_ij carries a factor 1/2,
    // so contraction + Jensen give ||E_J f - E_I f||^2 <= 4 avg_j ||D_ij f||^2.
    rep.inequality_holds = (rep.step_norm_sq <= 4 * rep.derivative_bound);
    return rep;
}

DichotomyReport dichotomy_report(const SliceFunction& f, int k) {
    DichotomyReport rep;
    rep.total_norm = norm_sq(f);
    rep.high_weight = rep.total_norm - low_weight(f, std::min(k, f.domain->ell()));
    bool integral = true;
    for (const auto& v : f.values)
        if (!is_integer(v)) integral = false;
    if (integral && rep.high_weight == 0 && !f.is_zero()) {
        rep.exact_case_checked = true;
        int n = f.domain->n(), ell = f.domain->ell();
        Int bound = (ell < k) ? Int(1) : binomial(n - 2 * k, ell - k);
        rep.exact_case_holds =
            rep.total_norm >= Rat(bound) / Rat(binomial(n, ell));
    }
    return rep;
}

}  // namespace slicekit
