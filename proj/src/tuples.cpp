#include "slicekit/tuples.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace slicekit {

KTuple::KTuple(std::vector<std::pair<int, int>> p) : pairs(std::move(p)) {
    std::sort(pairs.begin(), pairs.end());
}

std::vector<int> KTuple::endpoints() const {
    std::vector<int> e;
    for (auto [a, b] : pairs) {
        e.push_back(a);
        e.push_back(b);
    }
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<int> KTuple::b_set(bool sorted) const {
    std::vector<int> bs;
    for (auto [a, b] : pairs) bs.push_back(b);
    if (sorted) std::sort(bs.begin(), bs.end());
    return bs;
}

std::string KTuple::to_string() const {
    std::string s;
    for (auto [a, b] : pairs)
        s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return s;
}

KTuple parse_tuple(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("tuple parse error at position " + std::to_string(start));
        return std::stoi(text.substr(start, i - start));
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("tuple parse error at position " + std::to_string(i));
        ++i;
        int a = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != ',') throw std::invalid_argument("tuple parse error at position " + std::to_string(i));
        ++i;
        int b = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != ')') throw std::invalid_argument("tuple parse error at position " + std::to_string(i));
        ++i;
        pairs.emplace_back(a, b);
        skip_ws();
    }
    return KTuple(std::move(pairs));
}

void validate_tuple(const KTuple& P, int n) {
    std::set<int> seen;
    for (auto [a, b] : P.pairs) {
        if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("tuple endpoint out of range");
        if (a >= b) throw std::invalid_argument("tuple pair must have a < b");
        if (!seen.insert(a).second || !seen.insert(b).second)
            throw std::invalid_argument("tuple endpoints must be distinct");
    }
}

std::pair<bool, bool> classify(const KTuple& P, int n) {
    validate_tuple(P, n);
    std::set<int> uni;
    for (auto [a, b] : P.pairs) {
        uni.insert(a);
        uni.insert(b);
    }
    bool shifted = true;
    for (auto [a, b] : P.pairs) {
        for (int j = 1; j <= a && shifted; ++j)
            if (!uni.count(j)) shifted = false;
    }
    bool sorted = true;
    // Pairs are stored sorted by a, so sortedness means the b's ascend too.
    for (std::size_t i = 0; i + 1 < P.pairs.size(); ++i)
        if (P.pairs[i].second > P.pairs[i + 1].second) sorted = false;
    return {shifted, sorted};
}

bool is_shifted_sorted(const KTuple& P, int n) {
    auto [sh, so] = classify(P, n);
    return sh && so;
}

TupleMeasure measure(const KTuple& P, int n) {
    validate_tuple(P, n);
    long k = P.order();
    TupleMeasure t;
    for (std::size_t i = 0; i < P.pairs.size(); ++i)
        for (std::size_t j = 0; j < P.pairs.size(); ++j)
            if (P.pairs[i].first < P.pairs[j].first &&
                P.pairs[i].second > P.pairs[j].second)
                ++t.inv;
    auto eps = P.endpoints();
    auto rank_of = [&](int x) {
        return static_cast<long>(std::lower_bound(eps.begin(), eps.end(), x) - eps.begin()) + 1;
    };
    for (auto [a, b] : P.pairs) t.d += rank_of(b) - rank_of(a);
    long max_prefix = 0;  // max { l : [l] subset of endpoints }, 0 if 1 missing
    for (long l = 1; l <= static_cast<long>(eps.size()); ++l) {
        if (l <= static_cast<long>(eps.size()) && eps[l - 1] == l)
            max_prefix = l;
        else
            break;
    }
    t.I = (3 * k + 1) * (2 * k - max_prefix);
    t.m = t.inv + t.d + t.I;
    return t;
}

static void enum_ktuples_rec(int n, int k, int min_a,
                             std::vector<std::pair<int, int>>& cur,
                             Mask used, std::vector<KTuple>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.emplace_back(cur);
        return;
    }
    // Force the smallest unused endpoint to be the next a: every disjoint
    // pair family is produced exactly once this way.
    int a = min_a;
    while (a <= n && (used & (Mask{1} << (a - 1)))) ++a;
    if (a > n) return;
    for (int b = a + 1; b <= n; ++b) {
        if (used & (Mask{1} << (b - 1))) continue;
        cur.emplace_back(a, b);
        enum_ktuples_rec(n, k, a + 1,
                         cur, used | (Mask{1} << (a - 1)) | (Mask{1} << (b - 1)), out);
        cur.pop_back();
    }
}

std::vector<KTuple> enumerate_ktuples(int n, int k) {
    std::vector<KTuple> out;
    if (2 * k > n) return out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::pair<int, int>> cur;
    enum_ktuples_rec(n, k, 1, cur, 0, out);
    return out;
}

bool lex_less(const KTuple& P, const KTuple& Q) {
    return P.b_set() < Q.b_set();
}

std::vector<KTuple> enumerate_shifted_sorted(int n, int k) {
    std::vector<KTuple> out;
    for (const auto& P : enumerate_ktuples(n, k))
        if (is_shifted_sorted(P, n)) out.push_back(P);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::pair<ExpansionTerm, ExpansionTerm> rewrite_step(const KTuple& P,
                                                     const Permutation& pi,
                                                     int n) {
    auto [shifted, sorted] = classify(P, n);
    if (shifted && sorted) throw std::invalid_argument("tuple is already shifted sorted");
    if (!sorted) {
        // Case 1: pick the inversion ((w,z),(x,y)), w < x < y < z, minimizing
        // (w, x) lexicographically.
        int w = -1, z = -1, x = -1, y = -1;
        for (const auto& p : P.pairs)
            for (const auto& q : P.pairs)
                if (p.first < q.first && p.second > q.second) {
                    if (w < 0 || std::make_pair(p.first, q.first) < std::make_pair(w, x)) {
                        w = p.first;
                        z = p.second;
                        x = q.first;
                        y = q.second;
                    }
                }
        std::vector<std::pair<int, int>> rest;
        for (const auto& p : P.pairs)
            if (p != std::make_pair(w, z) && p != std::make_pair(x, y)) rest.push_back(p);
        auto s_pairs = rest;
        s_pairs.emplace_back(w, x);
        s_pairs.emplace_back(y, z);
        auto t_pairs = rest;
        t_pairs.emplace_back(w, y);
        t_pairs.emplace_back(x, z);
        ExpansionTerm s{KTuple(std::move(s_pairs)), compose(Permutation::transposition(n, w, y), pi)};
        ExpansionTerm t{KTuple(std::move(t_pairs)), compose(Permutation::transposition(n, z, y), pi)};
        return {std::move(s), std::move(t)};
    }
    // Case 2: sorted but non-shifted. Take the minimal a whose prefix is
    // uncovered and the minimal unused coordinate u.
    std::set<int> uni;
    for (auto [a, b] : P.pairs) {
        uni.insert(a);
        uni.insert(b);
    }
    int u = 1;
    while (uni.count(u)) ++u;
    int a = -1, b = -1;
    for (auto [pa, pb] : P.pairs) {
        bool covered = true;
        for (int j = 1; j <= pa; ++j)
            if (!uni.count(j)) { covered = false; break; }
        if (!covered) { a = pa; b = pb; break; }  // pairs are sorted by a
    }
    std::vector<std::pair<int, int>> rest;
    for (const auto& p : P.pairs)
        if (p != std::make_pair(a, b)) rest.push_back(p);
    auto s_pairs = rest;
    s_pairs.emplace_back(u, a);
    auto t_pairs = rest;
    t_pairs.emplace_back(u, b);
    ExpansionTerm s{KTuple(std::move(s_pairs)), compose(Permutation::transposition(n, u, b), pi)};
    ExpansionTerm t{KTuple(std::move(t_pairs)), compose(Permutation::transposition(n, u, a), pi)};
    return {std::move(s), std::move(t)};
}

static void expand_rec(const KTuple& P, const Permutation& pi, int n,
                       std::vector<ExpansionTerm>& out) {
    if (is_shifted_sorted(P, n)) {
        out.push_back({P, pi});
        return;
    }
    auto [s, t] = rewrite_step(P, pi, n);
    expand_rec(s.tuple, s.pi, n, out);
    expand_rec(t.tuple, t.pi, n, out);
}

std::vector<ExpansionTerm> expand_to_shifted_sorted(const KTuple& P, int n) {
    validate_tuple(P, n);
    if (2 * P.order() > n) throw std::invalid_argument("2k exceeds n");
    std::vector<ExpansionTerm> out;
    expand_rec(P, Permutation::identity(n), n, out);
    return out;
}

}  // namespace slicekit
