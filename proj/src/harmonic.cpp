#include "slicekit/harmonic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace slicekit {

SliceFunction and_function(DomainPtr d, const std::vector<int>& T) {
    Mask tm = coords_to_mask(d->n(), T);
    SliceFunction f(d);
    for (std::size_t i = 0; i < d->size(); ++i)
        f.values[i] = ((d->element(i) & tm) == tm) ? 1 : 0;
    return f;
}

SliceFunction psi_function(DomainPtr d, const KTuple& P) {
    for (auto [a, b] : P.pairs)
        if (a < 1 || b < 1 || a > d->n() || b > d->n() || a == b)
            throw std::invalid_argument("invalid tuple");
    SliceFunction f(d);
    for (std::size_t i = 0; i < d->size(); ++i) {
        Mask x = d->element(i);
        long v = 1;
        for (auto [a, b] : P.pairs)
            v *= static_cast<long>(bit(x, b)) - static_cast<long>(bit(x, a));
        f.values[i] = v;
    }
    return f;
}

// Sum of Psi over assignments of distinct a-values (drawn from `pool`) to
// the b's in B, with an optional a < b constraint.
static void chi_rec(DomainPtr d, const std::vector<int>& B,
                    const std::vector<int>& pool, bool require_a_below_b,
                    std::size_t idx, std::vector<std::pair<int, int>>& cur,
                    std::vector<bool>& used, SliceFunction& acc) {
    if (idx == B.size()) {
        KTuple P;
        P.pairs = cur;  // keep orientation as written; do not normalize
        acc += psi_function(d, P);
        return;
    }
    for (std::size_t t = 0; t < pool.size(); ++t) {
        if (used[t]) continue;
        if (require_a_below_b && pool[t] > B[idx]) continue;
        used[t] = true;
        cur.emplace_back(pool[t], B[idx]);
        chi_rec(d, B, pool, require_a_below_b, idx + 1, cur, used, acc);
        cur.pop_back();
        used[t] = false;
    }
}

SliceFunction chi_function(DomainPtr d, const std::vector<int>& B) {
    check_coords(d->n(), B);
    std::vector<int> pool;
    for (int i = 1; i <= d->n(); ++i)
        if (std::find(B.begin(), B.end(), i) == B.end()) pool.push_back(i);
    SliceFunction acc(d);
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(pool.size(), false);
    chi_rec(d, B, pool, /*require_a_below_b=*/true, 0, cur, used, acc);
    return acc;
}

namespace {

// Cached generators and Gram factorization for span{AND_T : |T| <= k}.
struct LevelContext {
    std::vector<Mask> gens;
    GramSolver solver;
};

const LevelContext& level_context(const SliceDomain& dom, int k) {
    static std::map<std::tuple<int, int, int>, LevelContext> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(dom.n(), dom.ell(), k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<Mask> gens;
    for (Mask t = 0; t < (Mask{1} << dom.n()); ++t)
        if (std::popcount(t) <= k) gens.push_back(t);
    std::sort(gens.begin(), gens.end(), [](Mask a, Mask b) {
        return std::make_pair(std::popcount(a), a) < std::make_pair(std::popcount(b), b);
    });
    // <AND_S, AND_T> = Pr[slice point covers S u T], in closed form.
    Int total = binomial(dom.n(), dom.ell());
    Mat G(gens.size(), Vec(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            int u = std::popcount(gens[i] | gens[j]);
            Rat v = Rat(binomial(dom.n() - u, dom.ell() - u)) / Rat(total);
            G[i][j] = v;
            G[j][i] = v;
        }
    auto [pos, ok] = cache.emplace(key, LevelContext{std::move(gens), GramSolver(G)});
    return pos->second;
}

Vec rhs_vector(const SliceFunction& f, const std::vector<Mask>& gens) {
    const auto& dom = *f.domain;
    Vec b(gens.size(), Rat(0));
    for (std::size_t i = 0; i < dom.size(); ++i) {
        const Rat& v = f.values[i];
        if (v == 0) continue;
        Mask x = dom.element(i);
        for (std::size_t g = 0; g < gens.size(); ++g)
            if ((x & gens[g]) == gens[g]) b[g] += v;
    }
    Rat total(static_cast<long>(dom.size()));
    for (auto& c : b) c /= total;
    return b;
}

}  // namespace

Rat low_weight(const SliceFunction& f, int k) {
    if (k < 0) return 0;
    const auto& ctx = level_context(*f.domain, std::min(k, f.domain->ell()));
    Vec b = rhs_vector(f, ctx.gens);
    Vec c = ctx.solver.solve(b);
    // ||f_low||^2 = <f, f_low> = c . b
    Rat w(0);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) w += c[i] * b[i];
    return w;
}

SliceFunction project_low(const SliceFunction& f, int k) {
    if (k < 0) return SliceFunction(f.domain);
    const auto& ctx = level_context(*f.domain, std::min(k, f.domain->ell()));
    Vec b = rhs_vector(f, ctx.gens);
    Vec c = ctx.solver.solve(b);
    SliceFunction g(f.domain);
    const auto& dom = *f.domain;
    for (std::size_t g_i = 0; g_i < ctx.gens.size(); ++g_i) {
        if (c[g_i] == 0) continue;
        Mask t = ctx.gens[g_i];
        for (std::size_t i = 0; i < dom.size(); ++i)
            if ((dom.element(i) & t) == t) g.values[i] += c[g_i];
    }
    return g;
}

LevelDecomposition project_levels(const SliceFunction& f, int k) {
    int ell = f.domain->ell();
    if (k < 0 || k > ell) throw std::invalid_argument("k out of range");
    LevelDecomposition out;
    std::vector<SliceFunction> lows;
    lows.reserve(ell + 1);
    for (int d = 0; d <= ell; ++d) lows.push_back(project_low(f, d));
    out.parts.reserve(ell + 1);
    out.weights.weights.reserve(ell + 1);
    for (int d = 0; d <= ell; ++d) {
        SliceFunction part = (d == 0) ? lows[0] : lows[d] - lows[d - 1];
        out.weights.weights.push_back(norm_sq(part));
        out.parts.push_back(std::move(part));
    }
    out.degree = 0;
    for (int d = 0; d <= ell; ++d)
        if (out.weights.weights[d] != 0) out.degree = d;
    out.low = lows[k];
    out.high = f - lows[k];
    return out;
}

int degree_of(const SliceFunction& f) {
    int ell = f.domain->ell();
    Rat full = norm_sq(f);
    for (int d = 0; d <= ell; ++d)
        if (low_weight(f, d) == full) return d;
    return ell;
}

SpanDims span_dims_check(DomainPtr d, int k) {
    if (k > d->ell()) throw std::invalid_argument("k exceeds ell");
    SpanDims out;
    RowBasis and_basis;
    std::vector<Vec> and_vecs;
    for (Mask t = 0; t < (Mask{1} << d->n()); ++t) {
        if (std::popcount(t) > k) continue;
        std::vector<int> T;
        for (int i = 1; i <= d->n(); ++i)
            if (t & (Mask{1} << (i - 1))) T.push_back(i);
        and_vecs.push_back(and_function(d, T).values);
        and_basis.insert(and_vecs.back());
    }
    RowBasis psi_basis;
    std::vector<Vec> psi_vecs;
    for (int j = 0; j <= k; ++j)
        for (const auto& Q : enumerate_ktuples(d->n(), j)) {
            psi_vecs.push_back(psi_function(d, Q).values);
            psi_basis.insert(psi_vecs.back());
        }
    out.dim_and = and_basis.rank();
    out.dim_psi = psi_basis.rank();
    out.mutual_containment = true;
    for (const auto& v : and_vecs)
        if (!psi_basis.contains(v)) out.mutual_containment = false;
    for (const auto& v : psi_vecs)
        if (!and_basis.contains(v)) out.mutual_containment = false;
    return out;
}

CompatibilityReport compatibility_identity_check(DomainPtr d, const std::vector<int>& T) {
    check_coords(d->n(), T);
    int k = static_cast<int>(T.size());
    if (k > d->ell()) throw std::invalid_argument("|T| exceeds ell");
    std::vector<int> pool;
    for (int i = 1; i <= d->n(); ++i)
        if (std::find(T.begin(), T.end(), i) == T.end()) pool.push_back(i);
    SliceFunction lhs(d);
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(pool.size(), false);
    // Unrestricted a's: evaluating Psi as written absorbs the proof's sign
    // fix for pairs with a > b.
    chi_rec(d, T, pool, /*require_a_below_b=*/false, 0, cur, used, lhs);

    CompatibilityReport rep;
    rep.holds = true;
    long np = d->ell();
    Int kfact;
    mpz_fac_ui(kfact.get_mpz_t(), static_cast<unsigned long>(k));
    for (std::size_t i = 0; i < d->size(); ++i) {
        Mask x = d->element(i);
        long X = 0;
        for (int c : T)
            if (bit(x, c)) ++X;
        Rat rhs = Rat(kfact) * Rat(binomial(np - X, k - X)) *
                  Rat(binomial(d->n() - np - k + X, X)) / Rat(binomial(k, X));
        if ((k - X) % 2 != 0) rhs = -rhs;
        rep.lhs.push_back(lhs.values[i]);
        rep.rhs.push_back(rhs);
        if (lhs.values[i] != rhs) rep.holds = false;
    }
    return rep;
}

Rat psi_support_probability(DomainPtr d, const KTuple& P) {
    validate_tuple(P, d->n());
    int k = P.order();
    if (2 * k > d->n()) throw std::invalid_argument("2k exceeds n");
    Rat two_k(1);
    for (int i = 0; i < k; ++i) two_k *= 2;
    return two_k * Rat(binomial(d->n() - 2 * k, d->ell() - k)) /
           Rat(binomial(d->n(), d->ell()));
}

}  // namespace slicekit
