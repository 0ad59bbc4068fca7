#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <wordint/errors.hpp>
#include <wordint/weingarten.hpp>

using namespace wordint;

namespace {
Polynomial n_poly() { return Polynomial::variable(); }

// A throwaway cache directory under the test cache root.
std::string temp_cache(const std::string& tag) {
    const char* base = std::getenv("WORDINT_CACHE");
    std::string root = base ? base : "/tmp";
    return root + "/tmp-" + tag;
}
}  // namespace

TEST_CASE("k = 1 table") {
    WeingartenEngine eng("");
    auto& t = eng.table('O', 1);
    REQUIRE(t.size() == 1);
    CHECK(t.at({1}) == RationalFunction(Polynomial(1), n_poly()));
    // Sp: Wg^Sp([1]) = (-1) * Wg^O([1]; -2n) = 1/(2n).
    CHECK(eng.wg_sp(1, identity_matching(1), identity_matching(1)) ==
          RationalFunction(Polynomial(Rat(1, 2)), n_poly()));
}

// Published k = 2 values: Wg^O([1,1]) = (n+1)/(n(n-1)(n+2)),
// Wg^O([2]) = -1/(n(n-1)(n+2)).
TEST_CASE("k = 2 table matches known closed forms") {
    WeingartenEngine eng("");
    auto& t = eng.table('O', 2);
    REQUIRE(t.size() == 2);
    Polynomial n = n_poly();
    Polynomial den = n * (n - Polynomial(1)) * (n + Polynomial(2));
    CHECK(t.at({1, 1}) == RationalFunction(n + Polynomial(1), den));
    CHECK(t.at({2}) == RationalFunction(Polynomial(-1), den));
}

// Independent oracle: invert the 3x3 Gram matrix of M_2 by hand. With
// rho(e, c) = rho(e, d) = rho(c, d) = 1 the Gram matrix is
// [[n^2, n, n], [n, n^2, n], [n, n, n^2]] and its first column inverse is
// ((n+1)/(n(n-1)(n+2)), -1/(n(n-1)(n+2)), -1/(n(n-1)(n+2))).
TEST_CASE("k = 2 against direct Gram inversion") {
    auto ms = enumerate_matchings(2);
    REQUIRE(ms.size() == 3);
    std::vector<std::vector<Polynomial>> gram(3, std::vector<Polynomial>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            gram[i][j] = WeingartenEngine::gram_entry(2, ms[i], ms[j]);
    std::vector<Polynomial> e1{Polynomial(1), Polynomial(0), Polynomial(0)};
    auto wg = solve_linear(gram, e1);

    WeingartenEngine eng("");
    for (int j = 0; j < 3; ++j) CHECK(wg[j] == eng.wg_o(2, ms[0], ms[j]));
}

TEST_CASE("class function property: value depends only on the coset type") {
    WeingartenEngine eng("");
    for (int k = 2; k <= 3; ++k) {
        auto ms = enumerate_matchings(k);
        // Compare against the column of a non-identity base point.
        const Matching& base = ms[1];
        for (const auto& m : ms)
            CHECK(eng.wg_o(k, base, m) == eng.wg_o_type(k, coset_type(base, m)));
    }
}

TEST_CASE("full Gram identity for k = 3") {
    WeingartenEngine eng("");
    auto ms = enumerate_matchings(3);
    Matching e = identity_matching(3);
    for (const auto& row : ms) {
        RationalFunction acc;
        for (const auto& m : ms)
            acc += RationalFunction(WeingartenEngine::gram_entry(3, row, m)) *
                   eng.wg_o(3, m, e);
        CHECK(acc == RationalFunction(row == e ? 1 : 0));
    }
}

TEST_CASE("series and decay checks") {
    WeingartenEngine eng("");
    for (int k = 1; k <= 3; ++k) {
        CHECK(eng.decay_check(k));
        auto ms = enumerate_matchings(k);
        CHECK(eng.wg_series_check(k, ms[0], ms[0], 4));
        CHECK(eng.wg_series_check(k, ms[0], ms.back(), 4));
        if (ms.size() > 2) CHECK(eng.wg_series_check(k, ms[1], ms[2], 4));
    }
}

TEST_CASE("Sp values via the -2n substitution") {
    WeingartenEngine eng("");
    // Wg^Sp(m1, m2; n) = (-1)^k sgn(sigma1) sgn(sigma2) Wg^O(m1, m2; -2n).
    for (int k = 1; k <= 3; ++k) {
        auto ms = enumerate_matchings(k);
        for (size_t i = 0; i < ms.size(); i += 3)
            for (size_t j = 0; j < ms.size(); j += 2) {
                RationalFunction expect =
                    eng.wg_o(k, ms[i], ms[j]).substitute_scaled(Rat(-2));
                long sgn = ((k % 2) ? -1 : 1) * sigma_sign(ms[i]) * sigma_sign(ms[j]);
                CHECK(eng.wg_sp(k, ms[i], ms[j]) == RationalFunction(sgn) * expect);
            }
    }
}

TEST_CASE("k cap") {
    WeingartenEngine eng("", 2);
    CHECK_THROWS_AS(eng.table('O', 3), CapExceeded);
    eng.set_k_cap(3);
    CHECK(eng.table('O', 3).size() == 3);
}

TEST_CASE("cache round trip") {
    std::string dir = temp_cache("roundtrip");
    {
        WeingartenEngine eng(dir);
        eng.clear_cache();
        eng.table('O', 2);
        eng.table('S', 2);
        CHECK(eng.cache_info().size() == 2);
    }
    {
        // A fresh engine loads the cached tables and re-verifies them.
        WeingartenEngine eng(dir);
        CHECK(eng.cache_info().size() == 2);
        Polynomial n = n_poly();
        Polynomial den = n * (n - Polynomial(1)) * (n + Polynomial(2));
        CHECK(eng.table('O', 2).at({2}) == RationalFunction(Polynomial(-1), den));
        eng.clear_cache();
        CHECK(eng.cache_info().empty());
    }
}

TEST_CASE("corrupted cache entries are rejected") {
    std::string dir = temp_cache("corrupt");
    WeingartenEngine seed(dir);
    seed.clear_cache();
    seed.table('O', 2);
    auto info = seed.cache_info();
    REQUIRE(info.size() == 1);

    SUBCASE("tampered value") {
        // Flip a numerator digit; re-verification must fail and recomputation
        // must restore the correct value.
        std::ifstream in(info[0].path);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        in.close();
        auto pos = text.find("\"-1\"");
        if (pos == std::string::npos) pos = text.find("-1");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 2, "-7");
        std::ofstream out(info[0].path, std::ios::trunc);
        out << text;
        out.close();

        WeingartenEngine eng(dir);
        Polynomial n = n_poly();
        Polynomial den = n * (n - Polynomial(1)) * (n + Polynomial(2));
        CHECK(eng.table('O', 2).at({2}) == RationalFunction(Polynomial(-1), den));
    }
    SUBCASE("syntactically broken file") {
        std::ofstream out(info[0].path, std::ios::trunc);
        out << "{ not json";
        out.close();
        WeingartenEngine eng(dir);
        CHECK(eng.table('O', 2).size() == 2);
    }
    seed.clear_cache();
}
