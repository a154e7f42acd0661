#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "slicekit/calculus.hpp"
#include "slicekit/tuples.hpp"

using namespace slicekit;

namespace {

KTuple T(std::vector<std::pair<int, int>> pairs) { return KTuple(std::move(pairs)); }

}  // namespace

TEST_CASE("classification") {
    CHECK(classify(T({{1, 2}, {3, 4}}), 8) == std::pair{true, true});
    CHECK(classify(T({{2, 8}, {6, 7}}), 8) == std::pair{false, false});
    CHECK(classify(T({{2, 6}, {7, 8}}), 8) == std::pair{false, true});
    CHECK_THROWS(validate_tuple(T({{1, 2}, {2, 3}}), 5));
    CHECK_THROWS(validate_tuple(T({{3, 2}}), 5));
}

TEST_CASE("shifted sorted enumeration") {
    auto v52 = enumerate_shifted_sorted(5, 2);
    std::vector<KTuple> expected = {
        T({{1, 2}, {3, 4}}), T({{1, 2}, {3, 5}}), T({{1, 3}, {2, 4}}),
        T({{1, 3}, {2, 5}}), T({{1, 4}, {2, 5}})};
    CHECK(v52 == expected);

    CHECK(enumerate_shifted_sorted(3, 1) ==
          std::vector<KTuple>{T({{1, 2}}), T({{1, 3}})});
    CHECK(enumerate_shifted_sorted(4, 2) ==
          std::vector<KTuple>{T({{1, 2}, {3, 4}}), T({{1, 3}, {2, 4}})});
    CHECK(enumerate_shifted_sorted(3, 2).empty());

    // The b-set determines the tuple, and the order is strictly increasing.
    auto v72 = enumerate_shifted_sorted(7, 2);
    for (std::size_t i = 0; i + 1 < v72.size(); ++i) {
        CHECK(lex_less(v72[i], v72[i + 1]));
        CHECK(v72[i].b_set() != v72[i + 1].b_set());
    }
}

TEST_CASE("termination measure") {
    auto m1 = measure(T({{2, 8}, {6, 7}}), 8);
    CHECK(m1.inv == 1);
    CHECK(m1.d == 4);
    CHECK(m1.I == 28);
    CHECK(m1.m == 33);
    CHECK(measure(T({{2, 6}, {7, 8}}), 8).m == 30);
    CHECK(measure(T({{2, 7}, {6, 8}}), 8).m == 32);
    CHECK(measure(T({{1, 7}, {2, 6}}), 8).m == 19);
    // Endpoints {1,2,6,8} cover the prefix {1,2}, so I = 7*(4-2) = 14.
    auto m2 = measure(T({{1, 8}, {2, 6}}), 8);
    CHECK(m2.inv == 1);
    CHECK(m2.d == 4);
    CHECK(m2.I == 14);
    CHECK(m2.m == 19);

    // Componentwise caps: inv <= C(k,2), d <= k^2, m <= 9k^2.
    for (const auto& P : enumerate_ktuples(6, 2)) {
        auto m = measure(P, 6);
        CHECK(m.inv <= 1);
        CHECK(m.d <= 4);
        CHECK(m.m <= 36);
        CHECK(m.m == m.inv + m.d + m.I);
    }
}

TEST_CASE("rewrite step worked examples") {
    Permutation id8 = Permutation::identity(8);

    auto [s1, t1] = rewrite_step(T({{2, 8}, {6, 7}}), id8, 8);
    CHECK(s1.tuple == T({{2, 6}, {7, 8}}));
    CHECK(s1.pi.image == Permutation::transposition(8, 2, 7).image);
    CHECK(t1.tuple == T({{2, 7}, {6, 8}}));
    CHECK(t1.pi.image == Permutation::transposition(8, 7, 8).image);

    auto [s2, t2] = rewrite_step(T({{2, 6}, {7, 8}}), id8, 8);
    CHECK(s2.tuple == T({{1, 2}, {7, 8}}));
    CHECK(s2.pi.image == Permutation::transposition(8, 1, 6).image);
    CHECK(t2.tuple == T({{1, 6}, {7, 8}}));
    CHECK(t2.pi.image == Permutation::transposition(8, 1, 2).image);
    CHECK(measure(s2.tuple, 8).m == 16);
    CHECK(measure(t2.tuple, 8).m == 23);

    CHECK_THROWS(rewrite_step(T({{1, 2}, {3, 4}}), id8, 8));
}

TEST_CASE("rewrite step identity and strict decrease") {
    auto d = make_domain(6, 3);
    for (const auto& P : enumerate_ktuples(6, 2)) {
        if (is_shifted_sorted(P, 6)) continue;
        auto [s, t] = rewrite_step(P, Permutation::identity(6), 6);
        long m = measure(P, 6).m;
        CHECK(measure(s.tuple, 6).m < m);
        CHECK(measure(t.tuple, 6).m < m);
        for (std::size_t i = 0; i < d->size(); ++i) {
            SliceFunction delta(d);
            delta.values[i] = 1;
            SliceFunction lhs = derivative(delta, P);
            SliceFunction rhs = apply_permutation(derivative(delta, s.tuple), s.pi);
            rhs += apply_permutation(derivative(delta, t.tuple), t.pi);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("expansion to shifted sorted leaves") {
    CHECK(expand_to_shifted_sorted(T({{1, 2}, {3, 4}}), 8).size() == 1);

    auto leaves23 = expand_to_shifted_sorted(T({{2, 3}}), 3);
    REQUIRE(leaves23.size() == 2);
    CHECK(leaves23[0].tuple == T({{1, 2}}));
    CHECK(leaves23[0].pi.image == Permutation::transposition(3, 1, 3).image);
    CHECK(leaves23[1].tuple == T({{1, 3}}));
    CHECK(leaves23[1].pi.image == Permutation::transposition(3, 1, 2).image);

    auto d = make_domain(6, 3);
    for (const auto& P : enumerate_ktuples(6, 2)) {
        auto leaves = expand_to_shifted_sorted(P, 6);
        long m = measure(P, 6).m;
        CHECK(static_cast<long>(leaves.size()) <= (long{1} << m));
        for (const auto& leaf : leaves) CHECK(is_shifted_sorted(leaf.tuple, 6));
        for (std::size_t i = 0; i < d->size(); ++i) {
            SliceFunction delta(d);
            delta.values[i] = 1;
            SliceFunction rhs(d);
            for (const auto& leaf : leaves)
                rhs += apply_permutation(derivative(delta, leaf.tuple), leaf.pi);
            CHECK(derivative(delta, P) == rhs);
        }
    }
}

TEST_CASE("identities: flip, alter, alter2, replacement") {
    for (auto [n, ell] : {std::pair{6, 3}, std::pair{5, 2}}) {
        auto d = make_domain(n, ell);
        Permutation cycle123 = Permutation::identity(n);
        cycle123.image[0] = 2;
        cycle123.image[1] = 3;
        cycle123.image[2] = 1;
        for (std::size_t i = 0; i < d->size(); ++i) {
            SliceFunction f(d);
            f.values[i] = 1;

            // flip: D_{12,34} f = (D_{13,24} f)^{(14)} + (D_{14,23} f)^{(24)}.
            SliceFunction flip_rhs =
                apply_transposition(derivative(f, KTuple({{1, 3}, {2, 4}})), 1, 4);
            flip_rhs += apply_transposition(derivative(f, KTuple({{1, 4}, {2, 3}})), 2, 4);
            CHECK(derivative(f, KTuple({{1, 2}, {3, 4}})) == flip_rhs);

            // alter: D_23 f = (D_12 f)^{(13)} + (D_13 f)^{(12)}.
            SliceFunction alter_rhs = apply_transposition(derivative(f, 1, 2), 1, 3);
            alter_rhs += apply_transposition(derivative(f, 1, 3), 1, 2);
            CHECK(derivative(f, 2, 3) == alter_rhs);

            // alter2: the signed sum over S_3 on three coordinates vanishes.
            SliceFunction acc = f;
            acc += apply_permutation(f, cycle123);
            acc += apply_permutation(f, compose(cycle123, cycle123));
            acc -= apply_transposition(f, 1, 2);
            acc -= apply_transposition(f, 1, 3);
            acc -= apply_transposition(f, 2, 3);
            CHECK(acc.is_zero());

            // replacement: D_23 f = D_12 f + (D_13 f)^{(12)} + (D_12 f)^{(123)}.
            SliceFunction repl_rhs = derivative(f, 1, 2);
            repl_rhs += apply_transposition(derivative(f, 1, 3), 1, 2);
            repl_rhs += apply_permutation(derivative(f, 1, 2), cycle123);
            CHECK(derivative(f, 2, 3) == repl_rhs);
        }
    }
}

TEST_CASE("triangle bound through expansions") {
    auto d = make_domain(6, 3);
    for (const auto& P : enumerate_ktuples(6, 2)) {
        auto leaves = expand_to_shifted_sorted(P, 6);
        for (int trial = 0; trial < 5; ++trial) {
            SliceFunction f = oracles::random_function(d, 100 + trial);
            double lhs = std::sqrt(norm_sq(derivative(f, P)).get_d());
            double rhs = 0;
            for (const auto& leaf : leaves)
                rhs += std::sqrt(norm_sq(derivative(f, leaf.tuple)).get_d());
            CHECK(lhs <= rhs + 1e-9);
        }
    }
}

TEST_CASE("tuple serialization") {
    KTuple P = parse_tuple("(2,8)(6,7)");
    CHECK(P == T({{2, 8}, {6, 7}}));
    CHECK(P.to_string() == "(2,8)(6,7)");
    CHECK(parse_tuple("").order() == 0);
    CHECK_THROWS(parse_tuple("(1,2"));
    CHECK_THROWS(parse_tuple("(1;2)"));
}
