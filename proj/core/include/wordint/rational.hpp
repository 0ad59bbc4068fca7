#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordint/polynomial.hpp"

namespace wordint {

// Reduced fraction of polynomials over Q: num/den with gcd(num, den) = 1 and
// den monic. Zero is represented as 0/1.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
    RationalFunction(long c) : num_(c), den_(1) {}               // NOLINT
    RationalFunction(const Rat& c) : num_(c), den_(1) {}         // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o);
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // Evaluate at a non-pole rational point; throws InternalError at a pole.
    Rat evaluate(const Rat& x) const;
    bool is_pole(const Rat& x) const { return den_.evaluate(x) == 0; }
    // f(a * n).
    RationalFunction substitute_scaled(const Rat& a) const;
    // deg den - deg num; by convention a very large value for the zero function.
    int order_at_infinity() const;

    // Both polynomials scaled to integer coefficients with overall content 1 and a
    // positive denominator leading coefficient, as decimal strings in ascending
    // degree order.
    void integer_form(std::vector<std::string>& num_out,
                      std::vector<std::string>& den_out) const;
    static RationalFunction from_integer_form(const std::vector<std::string>& num,
                                              const std::vector<std::string>& den);

    std::string str(const std::string& var = "n") const;
    // Best-effort factored display: rational roots are split off as linear factors.
    std::string factored_str(const std::string& var = "n") const;

  private:
    void normalize();
    Polynomial num_, den_;
};

// Laurent series around infinity in powers of (n - center)^{-1}. Coefficients are
// listed from the leading exponent downward: coeffs[i] multiplies
// (n - center)^(lead_exp - i). Exponents below (lead_exp - coeffs.size() + 1) are
// untracked (truncated), exponents above lead_exp are zero.
struct LaurentSeries {
    Rat center;
    long lead_exp = 0;
    std::vector<Rat> coeffs;

    long truncation_exp() const {
        return lead_exp - static_cast<long>(coeffs.size()) + 1;
    }
    // Coefficient of (n - center)^e; e must be >= truncation_exp().
    Rat coefficient(long e) const;
    std::string str(const std::string& var = "n") const;
};

// Expansion of f at infinity in powers of (n - center)^{-1}, reporting exponents
// from the leading one down to min_exp inclusive. For f == 0 the series is empty.
LaurentSeries laurent_at_infinity(const RationalFunction& f, const Rat& center,
                                  long min_exp);
// Convenience overload: `terms` coefficients starting at the leading exponent.
LaurentSeries laurent_at_infinity_terms(const RationalFunction& f, const Rat& center,
                                        int terms);

// Exact solution of A x = b over the rational-function field by fraction-free
// (Bareiss) elimination with exact pivoting. A is square, row-major.
// Throws InternalError if A is singular.
std::vector<RationalFunction> solve_linear(std::vector<std::vector<Polynomial>> a,
                                           std::vector<Polynomial> b);

}  // namespace wordint
