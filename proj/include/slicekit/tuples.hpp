#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slicekit/domain.hpp"

namespace slicekit {

// k disjoint ordered pairs (a,b) with a < b, stored sorted by a.
struct KTuple {
    std::vector<std::pair<int, int>> pairs;

    KTuple() = default;
    explicit KTuple(std::vector<std::pair<int, int>> p);

    int order() const { return static_cast<int>(pairs.size()); }
    std::vector<int> endpoints() const;        // sorted union of all endpoints
    std::vector<int> b_set(bool sorted = true) const;
    bool operator==(const KTuple& o) const { return pairs == o.pairs; }
    bool operator<(const KTuple& o) const { return pairs < o.pairs; }
    std::string to_string() const;             // "(a1,b1)(a2,b2)..."
};

KTuple parse_tuple(const std::string& text);
void validate_tuple(const KTuple& P, int n);

struct TupleMeasure {
    long inv = 0;
    long d = 0;
    long I = 0;
    long m = 0;
};

// shifted: every prefix [a_i] is covered by the endpoints; sorted: the
// orders of the a_i and b_i agree.
std::pair<bool, bool> classify(const KTuple& P, int n);
bool is_shifted_sorted(const KTuple& P, int n);

TupleMeasure measure(const KTuple& P, int n);

// All k-tuples over [n] (a < b, disjoint pairs), no predicate filter.
std::vector<KTuple> enumerate_ktuples(int n, int k);

// All shifted sorted k-tuples, in increasing lexicographic order of the
// sorted b-sequences.
std::vector<KTuple> enumerate_shifted_sorted(int n, int k);

// true iff P precedes Q in the lexicographic order on b-sequences.
bool lex_less(const KTuple& P, const KTuple& Q);

struct ExpansionTerm {
    KTuple tuple;
    Permutation pi;
};

// One step of the shifting rewrite: D_P f(x^pi) = D_S f(x^sigma) + D_T f(x^tau),
// with both replacement measures strictly below m(P). Throws if P is already
// shifted sorted.
std::pair<ExpansionTerm, ExpansionTerm> rewrite_step(const KTuple& P,
                                                     const Permutation& pi,
                                                     int n);

// Full closure: D_P f(x) = sum over leaves of D_{P_i} f(x^{pi_i}), with
// every leaf shifted sorted and all coefficients +1.
std::vector<ExpansionTerm> expand_to_shifted_sorted(const KTuple& P, int n);

}  // namespace slicekit
