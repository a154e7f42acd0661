#include "slicekit/domain.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace slicekit {

SliceDomain::SliceDomain(int n, int ell, std::size_t budget) : n_(n), ell_(ell) {
    if (n < 1 || n > 30) throw std::invalid_argument("n out of range");
    if (ell < 0 || ell > n) throw std::invalid_argument("ell out of range");
    Int count = binomial(n, ell);
    if (count > budget)
        throw std::invalid_argument("slice size exceeds enumeration budget");
    elements_.reserve(count.get_ui());
    if (ell == 0) {
        elements_.push_back(0);
    } else {
        // Gosper's hack: next higher integer with the same popcount.
        Mask x = (Mask{1} << ell) - 1;
        Mask limit = Mask{1} << n;
        while (x < limit) {
            elements_.push_back(x);
            Mask c = x & -x;
            Mask r = x + c;
            x = (((r ^ x) >> 2) / c) | r;
        }
    }
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
}

std::size_t SliceDomain::index_of(Mask x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw std::invalid_argument("mask not on slice");
    return it->second;
}

DomainPtr make_domain(int n, int ell, std::size_t budget) {
    return std::make_shared<SliceDomain>(n, ell, budget);
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.n = n;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 1);
    return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
    Permutation p = identity(n);
    std::swap(p.image[i - 1], p.image[j - 1]);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n; ++i)
        if (image[i - 1] != i) return false;
    return true;
}

Mask Permutation::apply(Mask x) const {
    Mask y = 0;
    for (int i = 1; i <= n; ++i)
        if (bit(x, i)) y |= Mask{1} << (image[i - 1] - 1);
    return y;
}

Permutation compose(const Permutation& later, const Permutation& first) {
    if (later.n != first.n) throw std::invalid_argument("permutation size mismatch");
    Permutation p;
    p.n = later.n;
    p.image.resize(p.n);
    for (int i = 1; i <= p.n; ++i) p.image[i - 1] = later(first(i));
    return p;
}

SliceFunction::SliceFunction(DomainPtr d, std::vector<Rat> v)
    : domain(std::move(d)), values(std::move(v)) {
    if (values.size() != domain->size())
        throw std::invalid_argument("value count does not match slice size");
}

SliceFunction::SliceFunction(DomainPtr d)
    : domain(std::move(d)), values(domain->size(), Rat(0)) {}

static void require_same_domain(const SliceFunction& f, const SliceFunction& g) {
    if (f.domain->n() != g.domain->n() || f.domain->ell() != g.domain->ell())
        throw std::invalid_argument("domain mismatch");
}

SliceFunction& SliceFunction::operator+=(const SliceFunction& g) {
    require_same_domain(*this, g);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += g.values[i];
    return *this;
}

SliceFunction& SliceFunction::operator-=(const SliceFunction& g) {
    require_same_domain(*this, g);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= g.values[i];
    return *this;
}

SliceFunction& SliceFunction::operator*=(const Rat& c) {
    for (auto& v : values) v *= c;
    return *this;
}

bool SliceFunction::operator==(const SliceFunction& g) const {
    return domain->n() == g.domain->n() && domain->ell() == g.domain->ell() &&
           values == g.values;
}

bool SliceFunction::is_zero() const {
    return std::all_of(values.begin(), values.end(),
                       [](const Rat& v) { return v == 0; });
}

SliceFunction constant(DomainPtr d, const Rat& c) {
    SliceFunction f(d);
    for (auto& v : f.values) v = c;
    return f;
}

SliceFunction dictator(DomainPtr d, int i) {
    if (i < 1 || i > d->n()) throw std::invalid_argument("coordinate out of range");
    SliceFunction f(d);
    for (std::size_t j = 0; j < d->size(); ++j)
        f.values[j] = bit(d->element(j), i) ? 1 : 0;
    return f;
}

Rat expectation(const SliceFunction& f) {
    Rat s(0);
    for (const auto& v : f.values) s += v;
    return s / Rat(static_cast<long>(f.values.size()));
}

Rat inner_product(const SliceFunction& f, const SliceFunction& g) {
    require_same_domain(f, g);
    Rat s(0);
    for (std::size_t i = 0; i < f.values.size(); ++i) s += f.values[i] * g.values[i];
    return s / Rat(static_cast<long>(f.values.size()));
}

Rat norm_sq(const SliceFunction& f) { return inner_product(f, f); }

SliceFunction apply_permutation(const SliceFunction& f, const Permutation& pi) {
    if (pi.n != f.domain->n()) throw std::invalid_argument("permutation size mismatch");
    SliceFunction g(f.domain);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        g.values[i] = f.values[f.domain->index_of(pi.apply(f.domain->element(i)))];
    return g;
}

SliceFunction apply_transposition(const SliceFunction& f, int i, int j) {
    return apply_permutation(f, Permutation::transposition(f.domain->n(), i, j));
}

void check_coords(int n, const std::vector<int>& I) {
    for (int i : I)
        if (i < 1 || i > n) throw std::invalid_argument("coordinate out of range");
}

Mask coords_to_mask(int n, const std::vector<int>& I) {
    check_coords(n, I);
    Mask m = 0;
    for (int i : I) m |= Mask{1} << (i - 1);
    return m;
}

SliceFunction average_over(const SliceFunction& f, const std::vector<int>& I) {
    const auto& dom = *f.domain;
    Mask im = coords_to_mask(dom.n(), I);
    // Group points by their bits outside I; E_I f is the group average.
    std::unordered_map<Mask, std::pair<Rat, long>> groups;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        auto& [sum, cnt] = groups[dom.element(i) & ~im];
        sum += f.values[i];
        ++cnt;
    }
    SliceFunction g(f.domain);
    for (std::size_t i = 0; i < dom.size(); ++i) {
        const auto& [sum, cnt] = groups[dom.element(i) & ~im];
        g.values[i] = sum / Rat(cnt);
    }
    return g;
}

Rat conditional_variance(const SliceFunction& f, const std::vector<int>& I) {
    return norm_sq(f - average_over(f, I));
}

SliceFunction restrict(const SliceFunction& f, const std::vector<int>& I, Mask x) {
    const auto& dom = *f.domain;
    Mask im = coords_to_mask(dom.n(), I);
    int fixed_ones = std::popcount(x & im);
    int sub_n = dom.n() - std::popcount(im);
    int sub_ell = dom.ell() - fixed_ones;
    if (sub_n < 0 || sub_ell < 0 || sub_ell > sub_n)
        throw std::invalid_argument("restriction yields an empty sub-slice");
    // Free coordinates of the full slice, in increasing order.
    std::vector<int> free_coords;
    for (int i = 1; i <= dom.n(); ++i)
        if (!(im & (Mask{1} << (i - 1)))) free_coords.push_back(i);
    DomainPtr sub = make_domain(sub_n, sub_ell);
    SliceFunction g(sub);
    for (std::size_t j = 0; j < sub->size(); ++j) {
        Mask z = sub->element(j);
        Mask lifted = x & im;
        for (int t = 0; t < sub_n; ++t)
            if (bit(z, t + 1)) lifted |= Mask{1} << (free_coords[t] - 1);
        g.values[j] = f.values[dom.index_of(lifted)];
    }
    return g;
}

}  // namespace slicekit
