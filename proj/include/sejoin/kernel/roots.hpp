#pragma once

// Certified real-root isolation over Q via Sturm chains. Irrational roots are
// carried as (square-free polynomial, isolating interval) pairs so that
// rationality questions stay decidable.

#include <string>
#include <variant>
#include <vector>

#include "sejoin/kernel/polynomial.hpp"

namespace sejoin {

// Default isolating-interval width after refinement: 10^-30.
Rational default_root_width();

// A real algebraic number: the unique root of `poly` in the open interval
// (lo, hi). `poly` is square-free and changes sign strictly across the interval.
class AlgebraicRoot {
public:
    AlgebraicRoot(Polynomial poly, Rational lo, Rational hi);

    const Polynomial& poly() const { return poly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }

    // Bisects until the width is below `width`. Stays an open interval; if a
    // bisection point is itself a root the root is rational and
    // ConsistencyError is thrown (rational roots are never stored here).
    AlgebraicRoot refined(const Rational& width) const;

    // The root times a nonzero rational s, as a root of p(z/s).
    AlgebraicRoot scaled(const Rational& s) const;

    // Sign of (root - x), decided exactly.
    int compare(const Rational& x) const;

    // Certified decimal bracket "[lo, hi]" with `digits` fractional digits.
    std::string decimal_bounds(int digits) const;

private:
    Polynomial poly_;
    Rational lo_;
    Rational hi_;
};

using RealRoot = std::variant<Rational, AlgebraicRoot>;

bool is_rational(const RealRoot& r);
// Midpoint of the isolating interval for algebraic roots; exact value otherwise.
Rational approximate(const RealRoot& r);
// Sign of (r - x).
int compare(const RealRoot& r, const Rational& x);
std::string to_string(const RealRoot& r, int digits = 40);

// Sturm chain p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_chain(const Polynomial& p);
// Sign variations of the chain evaluated at x (zeros skipped).
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

// Number of distinct real roots of p in the open interval (lo, hi).
int count_roots_open(const Polynomial& p, const Rational& lo, const Rational& hi);

// True iff p has no root in (lo, hi) and p > 0 there. Roots at the endpoints
// are allowed. Requires lo < hi.
bool sturm_positive_on(const Polynomial& p, const Rational& lo, const Rational& hi);

// Bound B with every real root in (-B, B).
Rational cauchy_root_bound(const Polynomial& p);

// All distinct real roots of a nonzero polynomial in increasing order.
// Rational roots are exact; the rest are isolated and refined to `width`.
std::vector<RealRoot> real_roots(const Polynomial& p, const Rational& width = default_root_width());

// Both real roots of A z^2 + B z + C (one if the discriminant is zero, none if
// negative), increasing. Throws DomainError when A = 0.
std::vector<RealRoot> solve_quadratic_rational(const Rational& a, const Rational& b, const Rational& c);

// All distinct real roots of a degree-3 polynomial. Throws DomainError otherwise.
std::vector<RealRoot> cubic_real_roots(const Polynomial& p, const Rational& width = default_root_width());

}  // namespace sejoin
