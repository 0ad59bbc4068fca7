#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace wordint {

using Rat = mpq_class;
using Int = mpz_class;

// Dense univariate polynomial over Q with exact (GMP) coefficients.
// Coefficients are stored in ascending degree order with no trailing zeros;
// the zero polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rat& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant);        // NOLINT(google-explicit-constructor)
    explicit Polynomial(std::vector<Rat> coeffs);

    static Polynomial variable();                          // n
    static Polynomial monomial(const Rat& coeff, int deg);  // coeff * n^deg

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat leading() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Quotient and remainder with deg(rem) < deg(divisor); divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    // Exact division; throws InternalError if the remainder is nonzero.
    Polynomial exact_div(const Polynomial& divisor) const;

    Rat evaluate(const Rat& x) const;
    // p(a * n): substitute a scaled variable (used for the O <-> Sp substitution).
    Polynomial substitute_scaled(const Rat& a) const;
    // Monic gcd over Q (gcd of anything with 0 is the other argument made monic).
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial monic() const;

    std::string str(const std::string& var = "n") const;

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

Polynomial operator*(const Rat& s, const Polynomial& p);

}  // namespace wordint
