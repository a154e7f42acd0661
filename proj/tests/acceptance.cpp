// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything except the explicitly float-tolerance checks is exact.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "slicekit/cli.hpp"
#include "slicekit/noise.hpp"
#include "slicekit/structure.hpp"

using namespace slicekit;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, double seconds) {
    std::printf("%s criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", index,
                name.c_str(), seconds);
    if (!ok) ++failures;
}

template <typename Fn>
void criterion(int index, const std::string& name, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(index, name, ok, seconds);
}

KTuple T(std::vector<std::pair<int, int>> pairs) { return KTuple(std::move(pairs)); }

struct Rng {
    std::uint64_t s;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

bool enumeration_criterion() {
    std::vector<KTuple> expected = {
        T({{1, 2}, {3, 4}}), T({{1, 2}, {3, 5}}), T({{1, 3}, {2, 4}}),
        T({{1, 3}, {2, 5}}), T({{1, 4}, {2, 5}})};
    return enumerate_shifted_sorted(5, 2) == expected;
}

bool measure_criterion() {
    return measure(T({{2, 8}, {6, 7}}), 8).m == 33 &&
           measure(T({{2, 6}, {7, 8}}), 8).m == 30 &&
           measure(T({{2, 7}, {6, 8}}), 8).m == 32 &&
           measure(T({{1, 7}, {2, 6}}), 8).m == 19 &&
           measure(T({{1, 8}, {2, 6}}), 8).m == 19;
}

bool identities_criterion() {
    for (auto [n, ell] : {std::pair{6, 3}, std::pair{7, 3}}) {
        auto d = make_domain(n, ell);
        Permutation cyc = Permutation::identity(n);
        cyc.image[0] = 2;
        cyc.image[1] = 3;
        cyc.image[2] = 1;
        for (std::size_t i = 0; i < d->size(); ++i) {
            SliceFunction f(d);
            f.values[i] = 1;

            SliceFunction flip =
                apply_transposition(derivative(f, T({{1, 3}, {2, 4}})), 1, 4);
            flip += apply_transposition(derivative(f, T({{1, 4}, {2, 3}})), 2, 4);
            if (!(derivative(f, T({{1, 2}, {3, 4}})) == flip)) return false;

            SliceFunction alter = apply_transposition(derivative(f, 1, 2), 1, 3);
            alter += apply_transposition(derivative(f, 1, 3), 1, 2);
            if (!(derivative(f, 2, 3) == alter)) return false;

            SliceFunction signed_sum = f;
            signed_sum += apply_permutation(f, cyc);
            signed_sum += apply_permutation(f, compose(cyc, cyc));
            signed_sum -= apply_transposition(f, 1, 2);
            signed_sum -= apply_transposition(f, 1, 3);
            signed_sum -= apply_transposition(f, 2, 3);
            if (!signed_sum.is_zero()) return false;

            SliceFunction repl = derivative(f, 1, 2);
            repl += apply_transposition(derivative(f, 1, 3), 1, 2);
            repl += apply_permutation(derivative(f, 1, 2), cyc);
            if (!(derivative(f, 2, 3) == repl)) return false;
        }
    }
    return true;
}

bool projection_laws_criterion() {
    auto d = make_domain(6, 3);
    std::vector<KTuple> tuples;
    for (int k : {1, 2})
        for (const auto& P : enumerate_ktuples(6, k)) tuples.push_back(P);
    for (int trial = 0; trial < 100; ++trial) {
        SliceFunction f = oracles::random_function(d, 5000 + 2 * trial);
        SliceFunction g = oracles::random_function(d, 5001 + 2 * trial);
        for (const auto& P : tuples) {
            SliceFunction df = derivative(f, P);
            if (!(derivative(df, P) == df)) return false;
            if (inner_product(df, g) != inner_product(f, derivative(g, P))) return false;
            if (norm_sq(df) > norm_sq(f)) return false;
        }
    }
    return true;
}

bool parseval_criterion() {
    int trial = 0;
    for (auto [n, ell] : {std::pair{5, 2}, std::pair{6, 3}, std::pair{7, 3}}) {
        auto d = make_domain(n, ell);
        for (int rep = 0; rep < 34 && trial < 100; ++rep, ++trial) {
            SliceFunction f = oracles::random_function(d, 6000 + trial);
            auto dec = project_levels(f, ell);
            Rat total(0);
            for (const auto& w : dec.weights.weights) total += w;
            if (total != norm_sq(f)) return false;
            for (std::size_t a = 0; a < dec.parts.size(); ++a)
                for (std::size_t b = a + 1; b < dec.parts.size(); ++b)
                    if (inner_product(dec.parts[a], dec.parts[b]) != 0) return false;
        }
    }
    return true;
}

bool span_criterion() {
    for (int n = 2; n <= 7; ++n)
        for (int ell = 0; ell <= n; ++ell) {
            auto d = make_domain(n, ell);
            for (int k = 0; k <= std::min(3, ell); ++k) {
                auto dims = span_dims_check(d, k);
                if (dims.dim_and != dims.dim_psi || !dims.mutual_containment)
                    return false;
            }
        }
    return true;
}

bool compatibility_criterion() {
    for (int n = 2; n <= 7; ++n)
        for (int ell = 1; ell < n; ++ell) {
            auto d = make_domain(n, ell);
            for (Mask tm = 0; tm < (Mask{1} << n); ++tm) {
                int k = std::popcount(tm);
                if (k > std::min(3, ell)) continue;
                std::vector<int> T;
                for (int i = 1; i <= n; ++i)
                    if (tm & (Mask{1} << (i - 1))) T.push_back(i);
                if (!compatibility_identity_check(d, T).holds) return false;
            }
        }
    return true;
}

bool spectrum_criterion() {
    for (auto [n, ell] :
         {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 3}, std::pair{7, 3}}) {
        auto d = make_domain(n, ell);
        SliceFunction f = oracles::random_function(d, 7000 + n);
        auto dec = project_levels(f, ell);
        for (int lev = 0; lev <= ell; ++lev) {
            SliceFunction want = dec.parts[lev];
            want *= laplacian_eigenvalue(n, lev);
            if (!(laplacian(dec.parts[lev]) == want)) return false;
        }
    }
    return true;
}

bool constructor_criterion() {
    Rng rng{31337};
    int done = 0;
    for (auto [n, ell] : {std::pair{6, 3}, std::pair{7, 3}}) {
        auto d = make_domain(n, ell);
        for (int l : {1, 2}) {
            auto vl = enumerate_shifted_sorted(n, l);
            auto all_tuples = enumerate_ktuples(n, l);
            std::vector<std::vector<ExpansionTerm>> expansions;
            for (const auto& Q : all_tuples)
                expansions.push_back(expand_to_shifted_sorted(Q, n));
            for (int rep = 0; rep < 25; ++rep, ++done) {
                DerivativeAssignment z;
                z.level = l;
                for (const auto& P : vl)
                    z.entries[P] =
                        make_rat(static_cast<long>(rng.next() % 9) - 4, long{1} << l);
                SliceFunction f = build_from_derivatives(d, z);
                if (degree_of(f) > l) return false;
                for (const auto& [P, val] : z.entries) {
                    SliceFunction want = psi_function(d, P);
                    want *= val;
                    if (!(derivative(f, P) == want)) return false;
                }
                // Every l-tuple derivative is pinned down by the shifted
                // sorted values through the expansion identity.
                for (std::size_t qi = 0; qi < all_tuples.size(); ++qi) {
                    SliceFunction implied(d);
                    for (const auto& leaf : expansions[qi]) {
                        SliceFunction term =
                            apply_permutation(psi_function(d, leaf.tuple), leaf.pi);
                        term *= z.entries.at(leaf.tuple);
                        implied += term;
                    }
                    if (!(derivative(f, all_tuples[qi]) == implied)) return false;
                }
            }
        }
    }
    return done == 100;
}

bool rewrite_edges_decrease(const KTuple& P, int n) {
    if (is_shifted_sorted(P, n)) return true;
    auto [s, t] = rewrite_step(P, Permutation::identity(n), n);
    long m = measure(P, n).m;
    if (measure(s.tuple, n).m >= m || measure(t.tuple, n).m >= m) return false;
    return rewrite_edges_decrease(s.tuple, n) && rewrite_edges_decrease(t.tuple, n);
}

bool rewrite_criterion() {
    auto d = make_domain(6, 3);
    std::vector<SliceFunction> random_fs;
    for (int i = 0; i < 20; ++i)
        random_fs.push_back(oracles::random_function(d, 8000 + i));
    for (const auto& P : enumerate_ktuples(6, 2)) {
        auto leaves = expand_to_shifted_sorted(P, 6);
        if (!rewrite_edges_decrease(P, 6)) return false;
        if (static_cast<long>(leaves.size()) > (long{1} << measure(P, 6).m))
            return false;
        for (std::size_t i = 0; i < d->size(); ++i) {
            SliceFunction delta(d);
            delta.values[i] = 1;
            SliceFunction rhs(d);
            for (const auto& leaf : leaves)
                rhs += apply_permutation(derivative(delta, leaf.tuple), leaf.pi);
            if (!(derivative(delta, P) == rhs)) return false;
        }
        for (const auto& f : random_fs) {
            double lhs = std::sqrt(norm_sq(derivative(f, P)).get_d());
            double rhs = 0;
            for (const auto& leaf : leaves)
                rhs += std::sqrt(norm_sq(derivative(f, leaf.tuple)).get_d());
            if (lhs > rhs + 1e-9) return false;
        }
    }
    return true;
}

bool fixed_point_criterion() {
    for (auto [n, ell] : {std::pair{6, 3}, std::pair{9, 3}}) {
        auto d = make_domain(n, ell);
        int k = 2;
        std::vector<SliceFunction> fs = {constant(d, 0), constant(d, 1)};
        for (int i = 1; i <= n; ++i) fs.push_back(dictator(d, i));
        fs.push_back(and_function(d, {1, 2}));
        fs.push_back(and_function(d, {2, 4}));
        for (const auto& f : fs) {
            auto r = approximate(f, k);
            if (!(r.g == f) || r.distance != 0) return false;
        }
    }
    return true;
}

bool recovery_criterion() {
    auto d = make_domain(9, 3);
    SliceFunction f = dictator(d, 1);
    f.values[0] = 1 - f.values[0];
    auto r = approximate(f, 1);
    if (!(r.g == dictator(d, 1)) || r.distance != make_rat(1, 84)) return false;
    auto oracle = oracles::nearest_degree1_boolean(f);
    return oracle.label == "dictator:1" &&
           make_rat(oracle.mismatches, 84) == r.distance;
}

bool support_criterion() {
    auto d = make_domain(8, 4);
    Rng rng{424242};
    for (int trial = 0; trial < 1000; ++trial) {
        int k = 1 + static_cast<int>(rng.next() % 2);
        SliceFunction f(d);
        for (Mask tm = 0; tm < (Mask{1} << 8); ++tm) {
            if (std::popcount(tm) > k) continue;
            long c = static_cast<long>(rng.next() % 7) - 3;
            if (c == 0) continue;
            std::vector<int> coords;
            for (int i = 1; i <= 8; ++i)
                if (tm & (Mask{1} << (i - 1))) coords.push_back(i);
            SliceFunction term = and_function(d, coords);
            term *= Rat(c);
            f += term;
        }
        if (!support_bound_check(f, k).holds) return false;
    }
    return true;
}

bool tail_criterion() {
    // Sparse side only (ell <= n/2); the other half follows by complementing
    // coordinates, and the bound genuinely fails there for tiny s at t = 2.
    for (int n = 2; n <= 12; ++n)
        for (int ell = 1; 2 * ell <= n; ++ell)
            for (int s = 1; s <= n; ++s)
                for (double t : {0.5, 1.0, 2.0}) {
                    auto tail = hypergeometric_tail(n, ell, s, t);
                    if (tail.exact_tail.get_d() > tail.bound + 1e-12) return false;
                }
    return true;
}

bool martingale_criterion() {
    auto d = make_domain(6, 3);
    for (int trial = 0; trial < 3; ++trial) {
        SliceFunction f = oracles::random_function(d, 9000 + trial);
        for (Mask im = 1; im < (Mask{1} << 6); ++im) {
            if (std::popcount(im) > 4) continue;
            std::vector<int> I;
            for (int i = 1; i <= 6; ++i)
                if (im & (Mask{1} << (i - 1))) I.push_back(i);
            for (int i : I) {
                auto rep = martingale_check(f, I, i);
                if (!rep.identity_holds || !rep.inequality_holds) return false;
            }
        }
    }
    return true;
}

bool split_levels_criterion() {
    auto d = make_domain(6, 3);
    for (int trial = 0; trial < 100; ++trial) {
        SliceFunction f = oracles::random_function(d, 10000 + trial);
        for (int k : {1, 2})
            for (double t : {0.1, 1.0, 10.0}) {
                auto g = split_levels_gap(f, k, t);
                if (g.rhs < g.lhs - 1e-9) return false;
            }
    }
    return true;
}

bool embedding_criterion() {
    CubeFunction maj(3);
    for (Mask x = 0; x < 8; ++x) maj.values[x] = Rat(std::popcount(x) >= 2 ? 1 : 0);
    double prev = 1.0;
    for (int m : {8, 12, 16, 20}) {
        SliceFunction fp = embed_to_slice(maj, m);
        Rat high = norm_sq(fp) - low_weight(fp, 1);
        double gap = std::abs(high.get_d() - 1.0 / 16.0);
        if (gap >= prev) return false;
        prev = gap;
    }
    return true;
}

bool sharp_bound_criterion() {
    if (std::abs(sharp_bound(1.0 / 16, 1) - 0.08415) > 1e-4) return false;
    double e4 = std::exp(-4.0);
    return std::abs(sharp_bound(e4, 2) - (e4 + 32.0 * std::exp(-8.0))) <= 1e-6;
}

bool cli_criterion() {
    std::vector<std::string> args = {"approximate", "--n", "6",  "--ell",
                                     "3",           "--k", "1",  "--f",
                                     "random-bool:17"};
    std::ostringstream out1, out2, err;
    if (cli::run(args, out1, err) != 0) return false;
    if (cli::run(args, out2, err) != 0) return false;
    if (out1.str() != out2.str()) return false;

    std::string path = "slicekit_acceptance_roundtrip.json";
    std::ostringstream out3;
    std::vector<std::string> wargs = {"derive", "--n",     "6",     "--ell", "3",
                                      "--f",    "psi:(1,2)(3,4)", "--tuple", "(1,2)",
                                      "--out",  path};
    if (cli::run(wargs, out3, err) != 0) return false;
    std::string doc = read_text_file(path);
    SliceFunction back = slice_function_from_json(doc);
    auto d = make_domain(6, 3);
    SliceFunction expected = derivative(psi_function(d, T({{1, 2}, {3, 4}})), T({{1, 2}}));
    bool ok = (back == expected) && (slice_function_to_json(back) == doc);
    std::remove(path.c_str());
    return ok;
}

}  // namespace

int main() {
    criterion(1, "shifted sorted enumeration order", enumeration_criterion);
    criterion(2, "termination measure worked values", measure_criterion);
    criterion(3, "pointwise rewriting identities", identities_criterion);
    criterion(4, "derivative projection laws", projection_laws_criterion);
    criterion(5, "Parseval and level orthogonality", parseval_criterion);
    criterion(6, "AND/Psi span equality", span_criterion);
    criterion(7, "compatibility identity", compatibility_criterion);
    criterion(8, "Laplacian spectrum", spectrum_criterion);
    criterion(9, "prescribed-derivative constructor", constructor_criterion);
    criterion(10, "rewrite engine contracts", rewrite_criterion);
    criterion(11, "approximation fixed points", fixed_point_criterion);
    criterion(12, "flipped dictator recovery", recovery_criterion);
    criterion(13, "support lower bound", support_criterion);
    criterion(14, "hypergeometric tail bound", tail_criterion);
    criterion(15, "martingale identity and inequality", martingale_criterion);
    criterion(16, "split-levels inequality", split_levels_criterion);
    criterion(17, "embedding weight convergence", embedding_criterion);
    criterion(18, "sharp bound values", sharp_bound_criterion);
    criterion(19, "CLI determinism and file round-trip", cli_criterion);
    if (failures) std::printf("%d criteria FAILED\n", failures);
    else std::printf("all 19 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
