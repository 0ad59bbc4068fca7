#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wordint/errors.hpp>
#include <wordint/rational.hpp>

using namespace wordint;

namespace {
Polynomial poly(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Polynomial(std::move(v));
}
}  // namespace

TEST_CASE("polynomial arithmetic") {
    Polynomial n = Polynomial::variable();
    Polynomial p = n * n - Polynomial(1);      // n^2 - 1
    Polynomial q = n + Polynomial(1);          // n + 1
    CHECK(p.degree() == 2);
    CHECK((p + q) == poly({0, 1, 1}));
    CHECK((p - p).is_zero());
    CHECK((q * q) == poly({1, 2, 1}));
    CHECK(p.evaluate(Rat(3)) == 8);
    CHECK((Polynomial(0) * p).is_zero());

    auto [quo, rem] = p.divmod(q);
    CHECK(quo == poly({-1, 1}));
    CHECK(rem.is_zero());
    CHECK(p.exact_div(q) == poly({-1, 1}));
    CHECK_THROWS_AS(q.exact_div(p), InternalError);

    // (n^2 - 1, n^2 + 2n + 1) -> n + 1, monic.
    CHECK(Polynomial::gcd(p, q * q) == q);
    CHECK(Polynomial::gcd(Rat(3) * p, Rat(5) * p) == p.monic());
    CHECK(Polynomial::gcd(Polynomial(), p) == p.monic());

    // p(a n).
    CHECK(p.substitute_scaled(Rat(-2)) == poly({-1, 0, 4}));
    CHECK(poly({0, 1, 0, 1}).substitute_scaled(Rat(1, 2)) ==
          Polynomial(std::vector<Rat>{Rat(0), Rat(1, 2), Rat(0), Rat(1, 8)}));
}

TEST_CASE("rational function normalization and arithmetic") {
    Polynomial n = Polynomial::variable();
    RationalFunction f(n * n - Polynomial(1), n + Polynomial(1));  // reduces to n - 1
    CHECK(f == RationalFunction(n - Polynomial(1)));
    CHECK(f.den() == Polynomial(1));

    RationalFunction g(Polynomial(1), n);
    RationalFunction h = f * g;  // (n-1)/n
    CHECK(h.num() == poly({-1, 1}));
    CHECK(h.den() == poly({0, 1}));
    CHECK((h + g) == RationalFunction(Polynomial(1)));
    CHECK((h - h).is_zero());
    CHECK((g / g) == RationalFunction(Polynomial(1)));
    CHECK(h.evaluate(Rat(4)) == Rat(3, 4));
    CHECK(h.is_pole(Rat(0)));
    CHECK_THROWS_AS(h.evaluate(Rat(0)), InternalError);

    // Denominator kept monic: (1)/(2n) -> (1/2)/n.
    RationalFunction r(Polynomial(1), Rat(2) * n);
    CHECK(r.den() == poly({0, 1}));
    CHECK(r.num() == Polynomial(Rat(1, 2)));

    CHECK(g.order_at_infinity() == 1);
    CHECK(f.order_at_infinity() == -1);
    CHECK(RationalFunction().order_at_infinity() > 1000000);

    // f(-2n) on 1/n gives -1/(2n).
    CHECK(g.substitute_scaled(Rat(-2)) == RationalFunction(Polynomial(Rat(-1, 2)), n));
}

TEST_CASE("integer form round trip") {
    Polynomial n = Polynomial::variable();
    RationalFunction f(Rat(3, 2) * n + Polynomial(Rat(1, 2)), n * n - Polynomial(4));
    std::vector<std::string> nu, de;
    f.integer_form(nu, de);
    // (3n + 1) / (2n^2 - 8), content 1, positive den leading coefficient.
    CHECK(nu == std::vector<std::string>{"1", "3"});
    CHECK(de == std::vector<std::string>{"-8", "0", "2"});
    CHECK(RationalFunction::from_integer_form(nu, de) == f);

    RationalFunction zero;
    zero.integer_form(nu, de);
    CHECK(nu == std::vector<std::string>{"0"});
    CHECK(RationalFunction::from_integer_form(nu, de).is_zero());
}

// Oracle: A = [[n, 1], [1, n]], b = (1, 0); solution x = (n, -1)/(n^2 - 1)
// by Cramer's rule computed by hand.
TEST_CASE("solve_linear 2x2 oracle") {
    Polynomial n = Polynomial::variable();
    std::vector<std::vector<Polynomial>> a{{n, Polynomial(1)}, {Polynomial(1), n}};
    std::vector<Polynomial> b{Polynomial(1), Polynomial(0)};
    auto x = solve_linear(a, b);
    Polynomial det = n * n - Polynomial(1);
    CHECK(x[0] == RationalFunction(n, det));
    CHECK(x[1] == RationalFunction(Polynomial(-1), det));

    // Singular matrix is rejected.
    std::vector<std::vector<Polynomial>> s{{n, n}, {n, n}};
    CHECK_THROWS_AS(solve_linear(s, b), InternalError);
}

TEST_CASE("solve_linear 3x3 cross-check against hand inverse") {
    // A = [[n,1,0],[1,n,1],[0,1,n]], b = e1. det = n^3 - 2n,
    // x = (n^2 - 1, -n, 1) / (n^3 - 2n).
    Polynomial n = Polynomial::variable();
    std::vector<std::vector<Polynomial>> a{
        {n, Polynomial(1), Polynomial(0)},
        {Polynomial(1), n, Polynomial(1)},
        {Polynomial(0), Polynomial(1), n}};
    std::vector<Polynomial> b{Polynomial(1), Polynomial(0), Polynomial(0)};
    auto x = solve_linear(a, b);
    Polynomial det = n * n * n - Rat(2) * n;
    CHECK(x[0] == RationalFunction(n * n - Polynomial(1), det));
    CHECK(x[1] == RationalFunction(-n, det));
    CHECK(x[2] == RationalFunction(Polynomial(1), det));
}

TEST_CASE("laurent expansion at infinity") {
    Polynomial n = Polynomial::variable();
    RationalFunction inv_n(Polynomial(1), n);

    SUBCASE("1/n at center 0") {
        LaurentSeries s = laurent_at_infinity(inv_n, Rat(0), -3);
        CHECK(s.lead_exp == -1);
        CHECK(s.coefficient(-1) == 1);
        CHECK(s.coefficient(-2) == 0);
        CHECK(s.coefficient(-3) == 0);
        CHECK_THROWS_AS(s.coefficient(-4), InternalError);
    }
    SUBCASE("1/n at center 1: geometric series (-1)^t (n-1)^{-1-t}") {
        LaurentSeries s = laurent_at_infinity(inv_n, Rat(1), -6);
        CHECK(s.lead_exp == -1);
        for (long t = 0; t <= 5; ++t)
            CHECK(s.coefficient(-1 - t) == Rat((t % 2 == 0) ? 1 : -1));
    }
    SUBCASE("1/n at center -1/2") {
        // 1/n = 1/((n + 1/2) - 1/2) = sum (1/2)^t (n + 1/2)^{-1-t}.
        LaurentSeries s = laurent_at_infinity(inv_n, Rat(-1, 2), -4);
        for (long t = 0; t <= 3; ++t) {
            Rat expect(1);
            for (long i = 0; i < t; ++i) expect /= 2;
            CHECK(s.coefficient(-1 - t) == expect);
        }
    }
    SUBCASE("polynomial part is exact") {
        // (n^2 + 1)/n = n + 1/n.
        RationalFunction f(n * n + Polynomial(1), n);
        LaurentSeries s = laurent_at_infinity(f, Rat(0), -2);
        CHECK(s.lead_exp == 1);
        CHECK(s.coefficient(1) == 1);
        CHECK(s.coefficient(0) == 0);
        CHECK(s.coefficient(-1) == 1);
        CHECK(s.coefficient(-2) == 0);
    }
    SUBCASE("terms overload and zero function") {
        LaurentSeries s = laurent_at_infinity_terms(inv_n, Rat(0), 3);
        CHECK(s.lead_exp == -1);
        CHECK(s.coeffs.size() == 3);
        LaurentSeries z = laurent_at_infinity(RationalFunction(), Rat(0), -3);
        CHECK(z.coeffs.empty());
    }
}

TEST_CASE("display helpers") {
    Polynomial n = Polynomial::variable();
    RationalFunction f(n + Polynomial(1), n * (n - Polynomial(1)));
    CHECK(f.str() == "(n + 1) / (n^2 - n)");
    CHECK(f.factored_str() == "(n + 1) / (n - 1)n");
    CHECK(RationalFunction().str() == "0");
}
