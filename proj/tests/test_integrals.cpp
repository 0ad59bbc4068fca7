#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wordint/errors.hpp>
#include <wordint/integrals.hpp>

using namespace wordint;

namespace {

WeingartenEngine& engine() {
    static WeingartenEngine eng("", 5);
    return eng;
}

RationalFunction rf(const std::vector<long>& num, const std::vector<long>& den) {
    auto poly = [](const std::vector<long>& cs) {
        std::vector<Rat> v;
        for (long c : cs) v.emplace_back(c);
        return Polynomial(std::move(v));
    };
    return RationalFunction(poly(num), poly(den));
}

std::vector<Word> words(const std::vector<std::string>& ws) {
    std::vector<Word> out;
    for (const auto& s : ws) out.push_back(parse_word(s));
    return out;
}

}  // namespace

TEST_CASE("single-word exact values") {
    auto& eng = engine();
    // Tr^O(x^2 y^2) = 1/n.
    CHECK(exact_trace_o(words({"aabb"}), eng) == rf({1}, {0, 1}));
    // Tr^O(x^4 y^4) = 1/n.
    CHECK(exact_trace_o(words({"a^4b^4"}), eng) == rf({1}, {0, 1}));
    // Tr^O([x,y]^2) = (n^3 + n^2 - 2n - 4) / (n(n+2)(n-1)).
    CHECK(exact_trace_o(words({"[a,b]^2"}), eng) ==
          rf({-4, -2, 1, 1}, {0, -2, 1, 1}));
    // Odd exponent: identically zero.
    CHECK(exact_trace_o(words({"ab^3A B"}), eng).is_zero());
    // Tr^O(x y^4 x^-1 y^-2) = 1/n.
    CHECK(exact_trace_o(words({"ab^4Ab^-2"}), eng) == rf({1}, {0, 1}));
    // Tr^O(x y x^2 y x^3 y^2) = (3n + 2) / (n(n+2)(n-1)).
    CHECK(exact_trace_o(words({"aba^2ba^3b^2"}), eng) == rf({2, 3}, {0, -2, 1, 1}));
}

TEST_CASE("tuple exact values") {
    auto& eng = engine();
    // Tr^O(x^2 y^2, x^2 y^2) = (n^3 + n^2 + 2n + 4) / (n(n+2)(n-1)).
    CHECK(exact_trace_o(words({"aabb", "aabb"}), eng) ==
          rf({4, 2, 1, 1}, {0, -2, 1, 1}));
    // Tr^O(x^2 y, x^2 y) = 1.
    CHECK(exact_trace_o(words({"aab", "aab"}), eng) == rf({1}, {1}));
    // Triple: 3(n^4 + 3n^3 - 2n^2 + 6n + 16) / ((n-2)(n-1)n(n+2)(n+4)).
    CHECK(exact_trace_o(words({"aabb", "aabb", "aabb"}), eng) ==
          rf({48, 18, -6, 9, 3}, {0, 16, -12, -8, 3, 1}));
}

// Tr^O(x_1^2 ... x_s^2) = n^{1-s} and Tr^Sp = (-1)^s (2n)^{1-s}.
TEST_CASE("products of distinct squares") {
    auto& eng = engine();
    std::string word;
    for (int s = 1; s <= 4; ++s) {
        word += std::string(2, static_cast<char>('a' + s - 1));
        auto ws = words({word});
        RationalFunction o = exact_trace_o(ws, eng);
        Polynomial den(1);
        for (int i = 1; i < s; ++i) den *= Polynomial::variable();
        CHECK(o == RationalFunction(Polynomial(1), den));
        RationalFunction sp = exact_trace_sp(ws, eng, SpMode::Direct);
        Rat scale(((s % 2) ? -1 : 1));
        for (int i = 1; i < s; ++i) scale /= 2;
        CHECK(sp == RationalFunction(scale) * RationalFunction(Polynomial(1), den));
    }
}

TEST_CASE("trace identity under free/cyclic equivalence") {
    auto& eng = engine();
    // x^2 y^2 and (xy)^2 y^2 conjugate-cyclically reduce differently but
    // xyxy^3 is genuinely different; equality here is by direct computation.
    CHECK(exact_trace_o(words({"aabb"}), eng) == exact_trace_o(words({"abab^3"}), eng));
    // Conjugation invariance.
    CHECK(exact_trace_o(words({"c aabb C"}), eng) == exact_trace_o(words({"aabb"}), eng));
    // Inversion invariance.
    CHECK(exact_trace_o(words({"BBAA"}), eng) == exact_trace_o(words({"aabb"}), eng));
}

TEST_CASE("Sp direct equals Sp via duality") {
    auto& eng = engine();
    for (const auto& t : std::vector<std::vector<std::string>>{
             {"aa"}, {"aabb"}, {"abab"}, {"[a,b]^2"}, {"aab", "aab"},
             {"aabb", "aabb"}, {"ab^4Ab^-2"}}) {
        auto ws = words(t);
        CHECK(duality_check(ws, eng));
        CHECK(exact_trace_sp(ws, eng, SpMode::Direct) ==
              exact_trace_sp(ws, eng, SpMode::Duality));
    }
}

TEST_CASE("chi_max census") {
    CHECK(chi_max(words({"aabb"})) == -1);
    CHECK(chi_max(words({"a^4b^4"})) == -1);
    CHECK(chi_max(words({"[a,b]^2"})) == 0);
    CHECK(chi_max(words({"ab^3A B"})) == -2);
    CHECK(chi_max(words({"ab^4Ab^-2"})) == -1);
    CHECK(chi_max(words({"aba^2ba^3b^2"})) == -2);
    CHECK(chi_max(words({"aabb", "aabb"})) == 0);
    CHECK(chi_max(words({"aab", "aab"})) == 0);
    CHECK(chi_max(words({"aabb", "aabb", "aabb"})) == -1);
    // No admissible surface when a generator has odd total exponent.
    CHECK_FALSE(chi_max(words({"ab"})).has_value());
}

TEST_CASE("sql and cl bounds") {
    // x^2 bounds square length by 1 (Moebius band) and has no orientable filling.
    auto b1 = sql_cl_bounds(parse_word("aa"));
    CHECK(b1.sql_bound == 1);
    CHECK_FALSE(b1.cl_bound.has_value());
    // [x,y]: torus gives cl <= 1; with one cross-cap sql <= 3.
    auto b2 = sql_cl_bounds(parse_word("[a,b]"));
    CHECK(b2.sql_bound == 3);
    CHECK(b2.cl_bound == 1);
    // [x,y]^2 is a product of 2 squares (well-known), sql <= 2.
    auto b3 = sql_cl_bounds(parse_word("[a,b]^2"));
    CHECK(b3.sql_bound <= 2);
}

TEST_CASE("first Laurent truncation matches the exact expansion") {
    auto& eng = engine();
    for (const auto& t : std::vector<std::vector<std::string>>{
             {"aabb"}, {"abab"}, {"[a,b]^2"}, {"aab", "aab"}, {"aabb", "aabb"}}) {
        auto ws = words(t);
        auto cm = chi_max(ws);
        REQUIRE(cm.has_value());
        int cutoff = *cm - 2;
        auto trunc = first_laurent_truncated(ws, cutoff);
        LaurentSeries s = laurent_at_infinity(exact_trace_o(ws, eng), Rat(0), cutoff);
        for (int e = *cm; e >= cutoff; --e) {
            Rat coeff = (s.coeffs.empty() || e > s.lead_exp) ? Rat(0) : s.coefficient(e);
            auto it = trunc.find(e);
            Rat pred = (it == trunc.end()) ? Rat(0) : Rat(it->second);
            CHECK(coeff == pred);
        }
        // Nothing above chi_max.
        for (const auto& [e, c] : trunc) CHECK(e <= *cm);
    }
}

TEST_CASE("shifted expansions") {
    auto& eng = engine();
    SUBCASE("x^2 y^2 at center 1: coefficients (-1)^t") {
        bool ok = false;
        LaurentSeries s = shifted_coefficients(words({"aabb"}), eng, 'O', 8, &ok);
        CHECK(ok);
        CHECK(s.center == 1);
        CHECK(s.lead_exp == -1);
        for (int t = 0; t < 8; ++t)
            CHECK(s.coefficient(-1 - t) == Rat((t % 2) ? -1 : 1));
    }
    SUBCASE("x^2 y^2 z^2 at center 1: coefficients (-1)^t (t+1)") {
        bool ok = false;
        LaurentSeries s = shifted_coefficients(words({"aabbcc"}), eng, 'O', 8, &ok);
        CHECK(ok);
        CHECK(s.lead_exp == -2);
        for (int t = 0; t < 8; ++t)
            CHECK(s.coefficient(-2 - t) == Rat(((t % 2) ? -1 : 1) * (t + 1)));
    }
    SUBCASE("integrality on a non-trivial value") {
        bool ok = false;
        shifted_coefficients(words({"[a,b]^2"}), eng, 'O', 10, &ok);
        CHECK(ok);
        shifted_coefficients(words({"aabb", "aabb", "aabb"}), eng, 'O', 10, &ok);
        CHECK(ok);
    }
    SUBCASE("Sp center is -1/2") {
        bool ok = true;
        LaurentSeries s = shifted_coefficients(words({"aabb"}), eng, 'S', 4, &ok);
        CHECK(s.center == Rat(-1, 2));
        // Tr^Sp(x^2y^2) = 1/(2n) = (1/2) sum (1/2)^t (n + 1/2)^{-1-t}.
        Rat expect(1, 2);
        for (int t = 0; t < 4; ++t) {
            CHECK(s.coefficient(-1 - t) == expect);
            expect /= 2;
        }
    }
}

TEST_CASE("local shift identity on reduced systems") {
    // The identity applies to reduced systems only (no consecutive duplicate
    // matchings): level-0 systems and level-1 systems with distinct levels.
    for (const auto& t : std::vector<std::vector<std::string>>{
             {"aa"}, {"aabb"}, {"abab"}, {"a^4"}}) {
        auto ws = words(t);
        auto tabs = interval_tables(ws);
        std::vector<MatchingSystem> reduced{MatchingSystem{}};
        for (const auto& [g, data] : tabs) {
            auto ms = enumerate_matchings(data.L);
            std::vector<MatchingSystem> next;
            for (const auto& sys : reduced)
                for (const auto& m0 : ms) {
                    MatchingSystem s0 = sys;
                    s0.chains[g] = {m0};
                    next.push_back(s0);
                    for (const auto& m1 : ms) {
                        if (m1 == m0) continue;
                        MatchingSystem s1 = sys;
                        s1.chains[g] = {m0, m1};
                        next.push_back(std::move(s1));
                    }
                }
            reduced = std::move(next);
        }
        for (const auto& sys : reduced) CHECK(smatch_shift_check(ws, sys, 4));
    }

    // Non-reduced input is rejected.
    auto ws = words({"aabb"});
    bool threw = false;
    for_each_kappa1_system(ws, [&](const MatchingSystem& sys) {
        for (const auto& [g, chain] : sys.chains)
            if (chain[0] == chain[1]) {
                CHECK_THROWS_AS(smatch_shift_check(ws, sys, 4), InternalError);
                threw = true;
            }
    });
    CHECK(threw);
}

TEST_CASE("limits agree with the constant coefficient") {
    auto& eng = engine();
    for (const auto& t : std::vector<std::vector<std::string>>{
             {"aabb"}, {"abab"}, {"[a,b]^2"}, {"aab", "aab"}, {"aabb", "aabb"},
             {"abab", "abab"}}) {
        auto ws = words(t);
        RationalFunction f = exact_trace_o(ws, eng);
        Rat c0 = f.is_zero() ? Rat(0)
                             : laurent_at_infinity(f, Rat(0), 0).coefficient(0);
        CHECK(c0 == Rat(mpq_class(limit_counting(ws))));
    }
}

TEST_CASE("integrate result document") {
    auto& eng = engine();
    IntegralResult r = integrate(words({"aabb"}), eng, 'O', Rat(1), 6);
    CHECK(r.exact == rf({1}, {0, 1}));
    CHECK(r.N == 1);
    CHECK(r.chi_max == -1);
    CHECK(r.integer_coeffs_ok == true);
    CHECK(r.limit_ok == true);
    CHECK(r.limit == 0);
    std::string doc = result_to_json(r);
    CHECK(doc.find("\"exact\"") != std::string::npos);
    CHECK(doc.find("\"laurent\"") != std::string::npos);

    IntegralResult rs = integrate(words({"aabb"}), eng, 'S', Rat(-1, 2), 6);
    CHECK(rs.duality_ok == true);
    CHECK(rs.exact == RationalFunction(Rat(1, 2)) * rf({1}, {0, 1}));
}

TEST_CASE("input validation") {
    auto& eng = engine();
    CHECK_THROWS_AS(exact_trace_o(words({"aA"}), eng), ParseError);
}
