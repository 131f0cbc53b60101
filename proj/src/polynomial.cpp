#include "sejoin/kernel/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "sejoin/errors.hpp"

namespace sejoin {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int power) {
    if (power < 0) throw DomainError("negative monomial power");
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& z) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return {};
    std::vector<Rational> v(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::even_part() const {
    std::vector<Rational> v = coeffs_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = 0;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scale_argument(const Rational& s) const {
    std::vector<Rational> v = coeffs_;
    Rational power = 1;
    for (auto& c : v) {
        c *= power;
        power *= s;
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::primitive_integer_part() const {
    if (is_zero()) return {};
    Integer den_lcm = 1;
    for (const auto& c : coeffs_) den_lcm = lcm(den_lcm, c.get_den());
    Integer num_gcd = 0;
    for (const auto& c : coeffs_) num_gcd = gcd(num_gcd, Integer(c.get_num() * (den_lcm / c.get_den())));
    Rational scale = make_rational(den_lcm, num_gcd);
    if (leading() < 0) scale = -scale;
    return *this * scale;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * Rational(1 / leading());
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(r);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

std::string Polynomial::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == 1 && i > 0;
        if (!unit) out << sejoin::to_string(mag);
        if (i > 0) {
            if (!unit) out << '*';
            out << var;
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial r = Polynomial::constant(1);
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = num.coeffs();
    int dd = den.degree();
    if (num.degree() < dd) return {Polynomial{}, num};
    std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd) + 1);
    const Rational& lead = den.leading();
    for (int i = num.degree(); i >= dd; --i) {
        Rational f = rem[static_cast<std::size_t>(i)] / lead;
        quot[static_cast<std::size_t>(i - dd)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * den.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.degree() < 1) return p.monic();
    return divmod(p, gcd(p, p.derivative())).first.monic();
}

Rational integrate_sym(const Polynomial& p) {
    // Odd powers cancel over [-1, 1]; z^(2j) contributes 2/(2j+1).
    Rational acc = 0;
    for (int i = 0; i <= p.degree(); i += 2) acc += p.coeff(i) * make_rational(2, i + 1);
    return acc;
}

Rational integrate(const Polynomial& p, const Rational& lo, const Rational& hi) {
    Polynomial prim = p.primitive();
    return prim(hi) - prim(lo);
}

}  // namespace sejoin
