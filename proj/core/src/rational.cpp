#include "wordint/rational.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wordint/errors.hpp"

namespace wordint {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InternalError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = 1 / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw InternalError("rational function division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    *this = *this + o;
    return *this;
}

Rat RationalFunction::evaluate(const Rat& x) const {
    Rat d = den_.evaluate(x);
    if (d == 0) throw InternalError("rational function evaluated at a pole");
    return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::substitute_scaled(const Rat& a) const {
    return RationalFunction(num_.substitute_scaled(a), den_.substitute_scaled(a));
}

int RationalFunction::order_at_infinity() const {
    if (is_zero()) return 1 << 28;
    return den_.degree() - num_.degree();
}

void RationalFunction::integer_form(std::vector<std::string>& num_out,
                                    std::vector<std::string>& den_out) const {
    // Common scalar that clears all coefficient denominators of num and den.
    Int l(1);
    for (const auto& c : num_.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : den_.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> ni, di;
    Int g(0);
    auto scale = [&](const Polynomial& p, std::vector<Int>& out) {
        for (const auto& c : p.coeffs()) {
            Rat v = c * l;
            out.push_back(v.get_num());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
        }
    };
    scale(num_, ni);
    scale(den_, di);
    if (g != 0) {
        for (auto& c : ni) c /= g;
        for (auto& c : di) c /= g;
    }
    if (!di.empty() && di.back() < 0) {
        for (auto& c : ni) c = -c;
        for (auto& c : di) c = -c;
    }
    num_out.clear();
    den_out.clear();
    for (const auto& c : ni) num_out.push_back(c.get_str());
    for (const auto& c : di) den_out.push_back(c.get_str());
    if (num_out.empty()) num_out.push_back("0");  // zero function
}

RationalFunction RationalFunction::from_integer_form(const std::vector<std::string>& num,
                                                     const std::vector<std::string>& den) {
    auto to_poly = [](const std::vector<std::string>& v) {
        std::vector<Rat> c;
        for (const auto& s : v) c.emplace_back(Int(s));
        return Polynomial(std::move(c));
    };
    return RationalFunction(to_poly(num), to_poly(den));
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_ == Polynomial(1)) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

namespace {

// Split an integer polynomial into content * linear factors * residual by rational
// root search (roots p/q with p | constant term, q | leading coefficient). Bails out
// of the search (leaving a residual) if the divisor sets would be too large.
struct Factored {
    Rat content = 1;
    // (root, multiplicity) pairs
    std::vector<std::pair<Rat, int>> roots;
    Polynomial residual = Polynomial(1);
};

std::vector<Int> small_divisors(const Int& v) {
    std::vector<Int> out;
    Int a = abs(v);
    if (a == 0 || a > 100000000) return out;
    for (Int d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
        }
    }
    return out;
}

Factored factor_rational_roots(const Polynomial& p) {
    Factored f;
    if (p.is_zero()) {
        f.content = 0;
        f.residual = Polynomial(1);
        return f;
    }
    Polynomial cur = p;
    // Pull out powers of the variable first.
    int zero_mult = 0;
    while (cur.coeff(0) == 0 && cur.degree() > 0) {
        cur = cur.exact_div(Polynomial::variable());
        ++zero_mult;
    }
    if (zero_mult > 0) f.roots.push_back({Rat(0), zero_mult});
    bool progress = true;
    while (cur.degree() > 0 && progress) {
        progress = false;
        auto ps = small_divisors(Int(cur.coeff(0).get_num() * cur.leading().get_den()));
        auto qs = small_divisors(Int(cur.leading().get_num() * cur.coeff(0).get_den()));
        std::set<Rat> candidates;
        for (const auto& pd : ps)
            for (const auto& qd : qs) {
                Rat r(pd, qd);
                r.canonicalize();
                candidates.insert(r);
                candidates.insert(-r);
            }
        for (const auto& r : candidates) {
            int mult = 0;
            while (cur.degree() > 0 && cur.evaluate(r) == 0) {
                Polynomial lin(std::vector<Rat>{-r, Rat(1)});
                cur = cur.exact_div(lin);
                ++mult;
            }
            if (mult > 0) {
                f.roots.push_back({r, mult});
                progress = true;
            }
        }
    }
    if (cur.degree() == 0) {
        f.content = cur.coeff(0);
        f.residual = Polynomial(1);
    } else {
        f.content = cur.leading();
        f.residual = cur.monic();
    }
    std::sort(f.roots.begin(), f.roots.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return f;
}

std::string factored_poly_str(const Polynomial& p, const std::string& var,
                              bool* simple_out) {
    Factored f = factor_rational_roots(p);
    std::ostringstream out;
    bool wrote = false;
    if (f.content != 1 || (f.roots.empty() && f.residual.degree() <= 0)) {
        out << f.content.get_str();
        wrote = true;
    }
    int pieces = 0;
    for (const auto& [root, mult] : f.roots) {
        std::string piece;
        if (root == 0) {
            piece = var;
        } else {
            Polynomial lin(std::vector<Rat>{-root, Rat(1)});
            piece = "(" + lin.str(var) + ")";
        }
        out << piece;
        if (mult > 1) out << "^" << mult;
        wrote = true;
        ++pieces;
    }
    if (f.residual.degree() > 0) {
        out << "(" << f.residual.str(var) << ")";
        ++pieces;
    }
    if (simple_out) *simple_out = (pieces <= 1 && f.content == 1);
    if (!wrote && f.residual.degree() <= 0) return f.content.get_str();
    return out.str();
}

}  // namespace

std::string RationalFunction::factored_str(const std::string& var) const {
    if (is_zero()) return "0";
    if (den_ == Polynomial(1) && num_.degree() <= 0) return num_.str(var);
    std::ostringstream out;
    bool simple = false;
    std::string ns = num_.degree() <= 0 ? num_.str(var)
                                        : factored_poly_str(num_, var, &simple);
    if (num_.degree() > 0 && !simple) ns = "(" + num_.str(var) + ")";
    out << ns;
    if (den_.degree() > 0 || den_ != Polynomial(1)) {
        out << " / " << (den_.degree() > 0 ? factored_poly_str(den_, var, nullptr)
                                           : den_.str(var));
    }
    return out.str();
}

Rat LaurentSeries::coefficient(long e) const {
    if (e > lead_exp) return Rat(0);
    if (e < truncation_exp())
        throw InternalError("Laurent coefficient requested below truncation");
    return coeffs[static_cast<size_t>(lead_exp - e)];
}

std::string LaurentSeries::str(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    Rat abs_center = abs(center);
    std::string base = (center == 0) ? var : "(" + var + (center > 0 ? " - " : " + ") +
                                                 abs_center.get_str() + ")";
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        long e = lead_exp - static_cast<long>(i);
        const Rat& c = coeffs[i];
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
        if (e == 0 || a != 1) out << a.get_str();
        if (e != 0) {
            if (a != 1) out << "*";
            out << base;
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    if (first) out << "0";
    out << " + O(" << base << "^" << truncation_exp() - 1 << ")";
    return out.str();
}

LaurentSeries laurent_at_infinity(const RationalFunction& f, const Rat& center,
                                  long min_exp) {
    LaurentSeries s;
    s.center = center;
    if (f.is_zero()) {
        s.lead_exp = min_exp - 1;
        return s;
    }
    // Substitute n = center + 1/u and clear powers of u:
    //   u^deg(p) * p(center + 1/u) = sum_i a_i (1 + center*u)^i u^(deg - i).
    auto to_u = [&](const Polynomial& p) {
        Polynomial shift(std::vector<Rat>{Rat(1), center});  // 1 + center*u
        Polynomial acc;                                      // shift^i, built up
        Polynomial pow(1);
        int d = p.degree();
        for (int i = 0; i <= d; ++i) {
            if (p.coeff(i) != 0)
                acc += p.coeff(i) * (pow * Polynomial::monomial(1, d - i));
            pow *= shift;
        }
        return acc;
    };
    Polynomial nu = to_u(f.num());
    Polynomial du = to_u(f.den());
    int alpha = 0, beta = 0;
    while (nu.coeff(alpha) == 0) ++alpha;
    while (du.coeff(beta) == 0) ++beta;
    long shift = (f.den().degree() - f.num().degree()) + alpha - beta;
    s.lead_exp = -shift;
    if (s.lead_exp < min_exp) {
        s.lead_exp = min_exp - 1;
        return s;
    }
    long terms = s.lead_exp - min_exp + 1;
    // Power-series division of (nu / u^alpha) by (du / u^beta) to `terms` coefficients.
    std::vector<Rat> q(static_cast<size_t>(terms), Rat(0));
    Rat d0 = du.coeff(beta);
    for (long t = 0; t < terms; ++t) {
        Rat acc = nu.coeff(alpha + static_cast<int>(t));
        for (long j = 1; j <= t; ++j)
            acc -= du.coeff(beta + static_cast<int>(j)) * q[static_cast<size_t>(t - j)];
        q[static_cast<size_t>(t)] = acc / d0;
    }
    s.coeffs = std::move(q);
    return s;
}

LaurentSeries laurent_at_infinity_terms(const RationalFunction& f, const Rat& center,
                                        int terms) {
    if (f.is_zero()) {
        LaurentSeries s;
        s.center = center;
        s.lead_exp = -1;
        s.coeffs.assign(static_cast<size_t>(terms), Rat(0));
        return s;
    }
    long lead = -static_cast<long>(f.order_at_infinity());
    return laurent_at_infinity(f, center, lead - terms + 1);
}

std::vector<RationalFunction> solve_linear(std::vector<std::vector<Polynomial>> a,
                                           std::vector<Polynomial> b) {
    const size_t n = a.size();
    for (auto& row : a) {
        if (row.size() != n) throw InternalError("solve_linear: matrix not square");
    }
    if (b.size() != n) throw InternalError("solve_linear: size mismatch");
    for (size_t i = 0; i < n; ++i) a[i].push_back(std::move(b[i]));

    Polynomial prev(1);
    for (size_t k = 0; k < n; ++k) {
        // Exact pivoting: pick the nonzero pivot of least degree in this column.
        size_t best = n;
        for (size_t r = k; r < n; ++r) {
            if (a[r][k].is_zero()) continue;
            if (best == n || a[r][k].degree() < a[best][k].degree()) best = r;
        }
        if (best == n) throw InternalError("solve_linear: singular matrix");
        if (best != k) std::swap(a[best], a[k]);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev);
            }
            a[i][k] = Polynomial();
        }
        prev = a[k][k];
    }
    std::vector<RationalFunction> x(n);
    for (size_t ii = n; ii-- > 0;) {
        RationalFunction acc{a[ii][n]};
        for (size_t j = ii + 1; j < n; ++j) acc = acc - RationalFunction(a[ii][j]) * x[j];
        x[ii] = acc / RationalFunction(a[ii][ii]);
    }
    return x;
}

}  // namespace wordint
