#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <wordint/errors.hpp>
#include <wordint/matching.hpp>

using namespace wordint;

TEST_CASE("enumeration counts (2k-1)!!") {
    long expect = 1;
    for (int k = 1; k <= 5; ++k) {
        expect *= 2 * k - 1;
        auto ms = enumerate_matchings(k);
        CHECK(static_cast<long>(ms.size()) == expect);
        // Canonical form and distinctness.
        std::set<Matching> seen(ms.begin(), ms.end());
        CHECK(seen.size() == ms.size());
        for (const auto& m : ms) {
            int prev_first = -1;
            std::set<int> used;
            for (auto [a, b] : m) {
                CHECK(a < b);
                CHECK(a > prev_first);
                prev_first = a;
                used.insert(a);
                used.insert(b);
            }
            CHECK(static_cast<int>(used.size()) == 2 * k);
        }
    }
    CHECK_THROWS_AS(enumerate_matchings(6), CapExceeded);
    CHECK(enumerate_matchings(6, 6).size() == 10395);
}

TEST_CASE("identity matching and pi/sigma tables") {
    Matching e = identity_matching(3);
    CHECK(e == Matching{{0, 1}, {2, 3}, {4, 5}});
    CHECK(pi(e) == std::vector<int>{1, 0, 3, 2, 5, 4});
    CHECK(sigma(e) == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(sigma_sign(e) == 1);

    Matching m{{0, 2}, {1, 3}};
    CHECK(pi(m) == std::vector<int>{2, 3, 0, 1});
    CHECK(sigma(m) == std::vector<int>{0, 2, 1, 3});
    CHECK(sigma_sign(m) == -1);
}

TEST_CASE("permutation sign") {
    CHECK(permutation_sign({0, 1, 2}) == 1);
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
    CHECK(permutation_sign({3, 2, 1, 0}) == 1);
}

// Hand values: for m1 = {(0,1),(2,3)} and m2 = {(0,2),(1,3)},
// pi1 pi2 = (0 3 2 1) is a 4-cycle, so 2 cycles / 2 = 1, rho = 2 - 1 = 1,
// coset type [2]. Against itself every matching gives rho 0 and type [1,1,...].
TEST_CASE("rho and coset type by hand") {
    Matching e2 = identity_matching(2);
    Matching c{{0, 2}, {1, 3}};
    Matching d{{0, 3}, {1, 2}};
    CHECK(rho(e2, e2) == 0);
    CHECK(rho(e2, c) == 1);
    CHECK(rho(e2, d) == 1);
    CHECK(rho(c, d) == 1);
    CHECK(coset_type(e2, e2) == std::vector<int>{1, 1});
    CHECK(coset_type(e2, c) == std::vector<int>{2});
    CHECK(coset_type(c, d) == std::vector<int>{2});

    for (const auto& m : enumerate_matchings(4)) {
        CHECK(rho(m, m) == 0);
        CHECK(coset_type(m, m) == std::vector<int>{1, 1, 1, 1});
    }
}

TEST_CASE("rho is symmetric and triangle-like on M_3") {
    auto ms = enumerate_matchings(3);
    for (const auto& a : ms)
        for (const auto& b : ms) {
            CHECK(rho(a, b) == rho(b, a));
            CHECK(rho(a, b) >= 0);
            CHECK(rho(a, b) <= 2);
            // Coset type parts sum to k.
            auto t = coset_type(a, b);
            int s = 0;
            for (int p : t) s += p;
            CHECK(s == 3);
            CHECK(std::is_sorted(t.rbegin(), t.rend()));
        }
}

TEST_CASE("compose") {
    std::vector<int> f{1, 2, 0};
    std::vector<int> g{2, 1, 0};
    // compose(f, g) = f after g? pin down the convention: result[i] = f[g[i]].
    CHECK(compose(f, g) == std::vector<int>{0, 2, 1});
}
