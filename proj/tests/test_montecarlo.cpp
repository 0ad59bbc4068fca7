#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <wordint/integrals.hpp>
#include <wordint/montecarlo.hpp>

using namespace wordint;

TEST_CASE("stream seeds are distinct and deterministic") {
    CHECK(stream_seed(1, 0) == stream_seed(1, 0));
    CHECK(stream_seed(1, 0) != stream_seed(1, 1));
    CHECK(stream_seed(1, 0) != stream_seed(2, 0));
}

TEST_CASE("sampled matrices satisfy group membership") {
    for (int n : {2, 5, 9}) {
        RealMatrix q = haar_orthogonal(n, stream_seed(7, 0));
        CHECK(orthogonality_residual(q) < 1e-10);
        ComplexMatrix s = haar_symplectic(n, stream_seed(7, 1));
        CHECK(s.n == 2 * n);
        CHECK(symplectic_residual(s) < 1e-10);
    }
}

TEST_CASE("estimates are reproducible across runs and worker splits") {
    std::vector<Word> ws{parse_word("aabb")};
    auto a = mc_estimate(ws, 'O', 5, 4000, 42, 1);
    auto b = mc_estimate(ws, 'O', 5, 4000, 42, 1);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.samples == 4000);

    auto c = mc_estimate(ws, 'O', 5, 4000, 42, 4);
    CHECK(c.samples == 4000);
    // Different partition of the work gives a different but nearby estimate.
    CHECK(std::abs(c.mean - a.mean) < 10 * (a.std_error + c.std_error));
}

TEST_CASE("estimates agree with exact values") {
    WeingartenEngine eng;
    auto zscore = [&](const std::vector<std::string>& t, char group, int n,
                      std::uint64_t seed) {
        std::vector<Word> ws;
        for (const auto& s : t) ws.push_back(parse_word(s));
        RationalFunction f = (group == 'O') ? exact_trace_o(ws, eng)
                                            : exact_trace_sp(ws, eng, SpMode::Direct);
        double exact = f.evaluate(Rat(n)).get_d();
        auto est = mc_estimate(ws, group, n, 30000, seed, 2);
        double denom = est.std_error > 1e-14 ? est.std_error : 1e-14;
        return std::abs(est.mean - exact) / denom;
    };
    CHECK(zscore({"aabb"}, 'O', 5, 11) < 4.0);
    CHECK(zscore({"aa"}, 'O', 4, 12) < 4.0);
    CHECK(zscore({"[a,b]^2"}, 'O', 6, 13) < 4.0);
    CHECK(zscore({"aabb"}, 'S', 3, 14) < 4.0);
    CHECK(zscore({"aab", "aab"}, 'S', 4, 15) < 4.0);
}

TEST_CASE("odd-exponent words average to zero") {
    std::vector<Word> ws{parse_word("ab")};
    auto est = mc_estimate(ws, 'O', 5, 20000, 3, 1);
    double denom = est.std_error > 1e-14 ? est.std_error : 1e-14;
    CHECK(std::abs(est.mean) / denom < 4.0);
}
