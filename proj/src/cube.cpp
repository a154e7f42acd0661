#include "slicekit/cube.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace slicekit {

CubeFunction::CubeFunction(int n_, std::vector<Rat> v) : n(n_), values(std::move(v)) {
    if (values.size() != (std::size_t{1} << n))
        throw std::invalid_argument("value count must be 2^n");
}

CubeFunction::CubeFunction(int n_) : n(n_), values(std::size_t{1} << n_, Rat(0)) {}

FourierExpansion fourier_transform(const CubeFunction& f, int budget) {
    if (f.n > budget) throw std::invalid_argument("cube size exceeds budget");
    FourierExpansion e;
    e.n = f.n;
    e.coefficients = f.values;
    std::size_t size = e.coefficients.size();
    for (std::size_t len = 1; len < size; len <<= 1)
        for (std::size_t i = 0; i < size; i += len << 1)
            for (std::size_t j = i; j < i + len; ++j) {
                Rat u = e.coefficients[j], v = e.coefficients[j + len];
                e.coefficients[j] = u + v;
                e.coefficients[j + len] = u - v;
            }
    Rat total(static_cast<long>(size));
    for (auto& c : e.coefficients) c /= total;
    return e;
}

CubeFunction inverse_fourier(const FourierExpansion& e) {
    CubeFunction f(e.n);
    f.values = e.coefficients;
    std::size_t size = f.values.size();
    for (std::size_t len = 1; len < size; len <<= 1)
        for (std::size_t i = 0; i < size; i += len << 1)
            for (std::size_t j = i; j < i + len; ++j) {
                Rat u = f.values[j], v = f.values[j + len];
                f.values[j] = u + v;
                f.values[j + len] = u - v;
            }
    return f;
}

Rat weight_above(const CubeFunction& f, int k) {
    auto e = fourier_transform(f);
    Rat w(0);
    for (std::size_t s = 0; s < e.coefficients.size(); ++s)
        if (std::popcount(s) > static_cast<unsigned>(k))
            w += e.coefficients[s] * e.coefficients[s];
    return w;
}

Rat cube_expectation(const CubeFunction& f) {
    Rat s(0);
    for (const auto& v : f.values) s += v;
    return s / Rat(static_cast<long>(f.values.size()));
}

Rat cube_norm_sq(const CubeFunction& f) {
    Rat s(0);
    for (const auto& v : f.values) s += v * v;
    return s / Rat(static_cast<long>(f.values.size()));
}

SliceFunction embed_to_slice(const CubeFunction& f, int m, std::size_t budget) {
    if (m < f.n || m % 2 != 0) throw std::invalid_argument("m must be even and >= n");
    DomainPtr d = make_domain(m, m / 2, budget);
    Mask low = (Mask{1} << f.n) - 1;
    SliceFunction out(d);
    for (std::size_t i = 0; i < d->size(); ++i)
        out.values[i] = f.values[d->element(i) & low];
    return out;
}

CubeFunction pullback_from_slice(const SliceFunction& g_prime, int n) {
    int m = g_prime.domain->n();
    if (m < 2 * n || (m - 2 * n) % 2 != 0)
        throw std::invalid_argument("slice too small for pullback");
    if (g_prime.domain->ell() != m / 2)
        throw std::invalid_argument("pullback requires the balanced slice");
    // Alternating 0,1 padding on coordinates 2n+1..m.
    Mask pad = 0;
    for (int c = 2 * n + 2; c <= m; c += 2) pad |= Mask{1} << (c - 1);
    Mask comp_block = ((Mask{1} << n) - 1) << n;
    CubeFunction g(n);
    for (Mask z = 0; z < (Mask{1} << n); ++z) {
        Mask lifted = z | (comp_block & ~(z << n)) | pad;
        g.values[z] = g_prime.value_at(lifted);
    }
    return g;
}

EmbeddingResult ks_via_embedding(const CubeFunction& f, int k, int m) {
    SliceFunction fp = embed_to_slice(f, m);
    auto approx = approximate(fp, k);
    EmbeddingResult out;
    out.slice_distance = approx.distance;
    out.invariant_outside = true;
    for (int i = f.n + 1; i <= m && out.invariant_outside; ++i)
        for (int j = i + 1; j <= m; ++j) {
            if (apply_transposition(approx.g, i, j) == approx.g) continue;
            out.invariant_outside = false;
            out.offending_pair = {i, j};
            break;
        }
    out.g = pullback_from_slice(approx.g, f.n);
    long mism = 0;
    for (std::size_t z = 0; z < out.g.values.size(); ++z)
        if (out.g.values[z] != f.values[z]) ++mism;
    out.cube_distance = make_rat(mism, static_cast<long>(out.g.values.size()));
    return out;
}

double sharp_bound(double eps, int k) {
    if (eps <= 0 || eps >= 1 || k < 1) throw std::invalid_argument("domain violation");
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    return eps + eps * eps * std::pow(2.0 * std::log(1.0 / eps), k) / kfact;
}

double cube_level_k_bound(double alpha, int k) {
    if (alpha <= 0 || alpha >= 1 || k < 1) throw std::invalid_argument("domain violation");
    return alpha * alpha *
           std::pow(2.0 * std::exp(1.0) / k * std::log(1.0 / alpha), k);
}

TightnessReport tightness_example(int n, int k, double t) {
    if (n > kDefaultCubeBudget || k < 0 || k >= n)
        throw std::invalid_argument("parameter out of range");
    TightnessReport rep;
    rep.g = CubeFunction(n);
    rep.f = CubeFunction(n);
    Mask head = (Mask{1} << k) - 1;
    double threshold = (n - k + t * std::sqrt(static_cast<double>(n - k))) / 2.0;
    long flips = 0;
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
        int gval = (std::popcount(x & head) % 2 == 0) ? 1 : -1;
        rep.g.values[x] = gval;
        long score = 0;
        for (int j = k + 1; j <= n; ++j) {
            int xj = bit(x, j) ? 1 : 0;
            int gpow = (gval == 1 || j % 2 == 0) ? 1 : -1;
            score += xj * gpow;
        }
        bool keep = static_cast<double>(score) < threshold;
        rep.f.values[x] = keep ? make_rat(1 + gval, 2) : make_rat(1 - gval, 2);
        if (!keep) ++flips;
    }
    rep.delta = make_rat(flips, long{1} << n);
    rep.eps = weight_above(rep.f, k);
    rep.low_weight = cube_norm_sq(rep.f) - rep.eps;
    rep.sharp = (rep.eps > 0 && k >= 1) ? sharp_bound(rep.eps.get_d(), k) : 0.0;
    return rep;
}

}  // namespace slicekit
