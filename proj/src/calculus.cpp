#include "slicekit/calculus.hpp"

#include <bit>
#include <stdexcept>

namespace slicekit {

SliceFunction derivative(const SliceFunction& f, const KTuple& P) {
    validate_tuple(P, f.domain->n());
    int k = P.order();
    const auto& dom = *f.domain;
    SliceFunction g(f.domain);
    for (std::size_t i = 0; i < dom.size(); ++i) {
        Mask x = dom.element(i);
        Rat acc(0);
        for (unsigned sub = 0; sub < (1u << k); ++sub) {
            Mask y = x;
            for (int t = 0; t < k; ++t) {
                if (!(sub & (1u << t))) continue;
                auto [a, b] = P.pairs[t];
                bool ba = bit(y, a), bb = bit(y, b);
                if (ba != bb) {
                    y ^= Mask{1} << (a - 1);
                    y ^= Mask{1} << (b - 1);
                }
            }
            if (std::popcount(sub) % 2 == 0)
                acc += f.values[dom.index_of(y)];
            else
                acc -= f.values[dom.index_of(y)];
        }
        acc /= (1 << k);
        g.values[i] = std::move(acc);
    }
    return g;
}

SliceFunction derivative(const SliceFunction& f, int i, int j) {
    if (i == j) return SliceFunction(f.domain);  // D_ii = 0 by convention
    if (i > j) std::swap(i, j);
    return derivative(f, KTuple({{i, j}}));
}

Rat extract_multiple(const SliceFunction& g, const KTuple& P) {
    SliceFunction psi = psi_function(g.domain, P);
    Rat psi_norm = norm_sq(psi);
    if (psi_norm == 0) {
        if (!g.is_zero()) throw std::invalid_argument("g is not a multiple of a vanishing Psi");
        return 0;
    }
    Rat t = inner_product(g, psi) / psi_norm;
    if (!(t * psi == g))
        throw std::invalid_argument("g is not an exact multiple of Psi_P");
    return t;
}

SliceFunction build_from_derivatives(DomainPtr d, const DerivativeAssignment& z) {
    int l = z.level;
    if (2 * l > d->n() || l > d->ell())
        throw std::invalid_argument("level too large for this slice");
    auto tuples = enumerate_shifted_sorted(d->n(), l);
    if (z.entries.size() != tuples.size())
        throw std::invalid_argument("assignment must cover exactly the shifted sorted l-tuples");
    for (const auto& [P, v] : z.entries) {
        if (!is_shifted_sorted(P, d->n()))
            throw std::invalid_argument("assignment key is not shifted sorted: " + P.to_string());
        if (!is_dyadic(v, l))
            throw std::invalid_argument("assignment value not in 2^-l Z for " + P.to_string());
    }
    Rat two_l(1);
    for (int i = 0; i < l; ++i) two_l *= 2;
    SliceFunction f(d);
    for (const auto& P : tuples) {
        auto it = z.entries.find(P);
        if (it == z.entries.end())
            throw std::invalid_argument("assignment missing tuple " + P.to_string());
        // Triangularity of C means D_P f currently is an exact multiple of
        // Psi_P; extract_multiple doubles as the runtime check.
        Rat t = extract_multiple(derivative(f, P), P);
        Rat coeff = two_l * (it->second - t);
        if (coeff != 0) f += coeff * and_function(d, P.b_set());
    }
    return f;
}

}  // namespace slicekit
