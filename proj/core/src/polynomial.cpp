#include "wordint/polynomial.hpp"

#include <sstream>

#include "wordint/errors.hpp"

namespace wordint {

Polynomial::Polynomial(const Rat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(long constant) {
    if (constant != 0) coeffs_.emplace_back(constant);
}

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::variable() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rat& coeff, int deg) {
    Polynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(deg + 1, Rat(0));
        p.coeffs_[deg] = coeff;
    }
    return p;
}

Rat Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

Rat Polynomial::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(*this);
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    Polynomial r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial operator*(const Rat& s, const Polynomial& p) {
    std::vector<Rat> c = p.coeffs();
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw InternalError("polynomial division by zero");
    Polynomial rem(*this);
    Polynomial quot;
    int dd = divisor.degree();
    const Rat lead = divisor.leading();
    if (rem.degree() >= dd) quot.coeffs_.assign(rem.degree() - dd + 1, Rat(0));
    while (rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rat f = rem.leading() / lead;
        quot.coeffs_[shift] = f;
        for (int i = 0; i <= dd; ++i) rem.coeffs_[shift + i] -= f * divisor.coeffs_[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw InternalError("polynomial division expected to be exact");
    return q;
}

Rat Polynomial::evaluate(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::substitute_scaled(const Rat& a) const {
    std::vector<Rat> c = coeffs_;
    Rat pow(1);
    for (size_t i = 1; i < c.size(); ++i) {
        pow *= a;
        c[i] *= pow;
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rat inv = 1 / leading();
    return inv * *this;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

}  // namespace wordint
