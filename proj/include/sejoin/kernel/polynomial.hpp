#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sejoin/kernel/arith.hpp"

namespace sejoin {

// Dense univariate polynomial over Q. coeffs()[i] multiplies z^i; trailing
// zeros are trimmed so the leading coefficient is nonzero, and the zero
// polynomial has no coefficients (degree -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int power);
    // c0 + c1*z
    static Polynomial linear(const Rational& c0, const Rational& c1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    // Coefficient of z^i; zero past the degree.
    Rational coeff(int i) const;
    const Rational& leading() const;

    Rational operator()(const Rational& z) const;
    Polynomial derivative() const;
    // Antiderivative with zero constant term.
    Polynomial primitive() const;
    Polynomial even_part() const;
    // p(s*z)
    Polynomial scale_argument(const Rational& s) const;
    // Scalar multiple with coprime integer coefficients and positive leading coefficient.
    Polynomial primitive_integer_part() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    // Human-readable, highest power first, e.g. "33*z^3 - 12*z^2 - 57*z - 102".
    std::string to_string(const char* var = "z") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned e);

// Euclidean division; throws DomainError when the divisor is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

// Exact integral of p over [-1, 1].
Rational integrate_sym(const Polynomial& p);
// Exact integral of p over [lo, hi].
Rational integrate(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace sejoin
