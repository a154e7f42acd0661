#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "slicekit/rational.hpp"

namespace slicekit {

using Mask = std::uint32_t;

// Coordinates are 1-based throughout the public API; coordinate i is
// bit (i-1) of a mask, so coordinate 1 is the least significant bit.
inline bool bit(Mask x, int coord) { return (x >> (coord - 1)) & 1u; }

constexpr std::size_t kDefaultBudget = std::size_t{1} << 24;

// The slice: all n-bit masks of popcount ell, listed ascending as integers.
class SliceDomain {
public:
    SliceDomain(int n, int ell, std::size_t budget = kDefaultBudget);

    int n() const { return n_; }
    int ell() const { return ell_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Mask>& elements() const { return elements_; }
    Mask element(std::size_t i) const { return elements_[i]; }
    std::size_t index_of(Mask x) const;
    Rat p() const { return make_rat(ell_, n_); }

private:
    int n_;
    int ell_;
    std::vector<Mask> elements_;
    std::unordered_map<Mask, std::size_t> index_;
};

using DomainPtr = std::shared_ptr<const SliceDomain>;

DomainPtr make_domain(int n, int ell, std::size_t budget = kDefaultBudget);

struct Permutation {
    int n = 0;
    std::vector<int> image;  // image[i-1] = pi(i), a bijection on [n]

    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);
    bool is_identity() const;
    int operator()(int i) const { return image[i - 1]; }
    Mask apply(Mask x) const;  // y with y_{pi(i)} = x_i
};

// this o other: apply `other` first.
Permutation compose(const Permutation& later, const Permutation& first);

struct SliceFunction {
    DomainPtr domain;
    std::vector<Rat> values;  // one per element, canonical order

    SliceFunction() = default;
    SliceFunction(DomainPtr d, std::vector<Rat> v);
    explicit SliceFunction(DomainPtr d);  // zero function

    const Rat& at(std::size_t i) const { return values[i]; }
    Rat& at(std::size_t i) { return values[i]; }
    Rat value_at(Mask x) const { return values[domain->index_of(x)]; }

    SliceFunction& operator+=(const SliceFunction& g);
    SliceFunction& operator-=(const SliceFunction& g);
    SliceFunction& operator*=(const Rat& c);
    friend SliceFunction operator+(SliceFunction f, const SliceFunction& g) { return f += g; }
    friend SliceFunction operator-(SliceFunction f, const SliceFunction& g) { return f -= g; }
    friend SliceFunction operator*(const Rat& c, SliceFunction f) { return f *= c; }
    bool operator==(const SliceFunction& g) const;
    bool is_zero() const;
};

SliceFunction constant(DomainPtr d, const Rat& c);
SliceFunction dictator(DomainPtr d, int i);  // x_i

Rat expectation(const SliceFunction& f);
Rat inner_product(const SliceFunction& f, const SliceFunction& g);
Rat norm_sq(const SliceFunction& f);

// f^pi with f^pi(x) = f(x^pi).
SliceFunction apply_permutation(const SliceFunction& f, const Permutation& pi);
SliceFunction apply_transposition(const SliceFunction& f, int i, int j);

// E_I f: for each x, the average of f over {y : y agrees with x outside I}.
SliceFunction average_over(const SliceFunction& f, const std::vector<int>& I);

// V_I(f) = ||f - E_I f||^2.
Rat conditional_variance(const SliceFunction& f, const std::vector<int>& I);

// Restriction to the sub-slice fixing the coordinates in I to their values
// in x; result lives on coordinates [n] \ I (renumbered in increasing order).
SliceFunction restrict(const SliceFunction& f, const std::vector<int>& I, Mask x);

void check_coords(int n, const std::vector<int>& I);
Mask coords_to_mask(int n, const std::vector<int>& I);

}  // namespace slicekit
