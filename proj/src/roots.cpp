#include "sejoin/kernel/roots.hpp"

#include <algorithm>

#include "sejoin/errors.hpp"

namespace sejoin {

Rational default_root_width() {
    Integer ten30;
    mpz_ui_pow_ui(ten30.get_mpz_t(), 10, 30);
    return make_rational(1, ten30);
}

AlgebraicRoot::AlgebraicRoot(Polynomial poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_)) throw DomainError("isolating interval must have lo < hi");
    if (sign(poly_(lo_)) * sign(poly_(hi_)) >= 0)
        throw DomainError("polynomial " + poly_.to_string() + " has no sign change on (" + to_string(lo_) + ", " +
                          to_string(hi_) + ")");
}

AlgebraicRoot AlgebraicRoot::refined(const Rational& width) const {
    Rational lo = lo_, hi = hi_;
    int lo_sign = sign(poly_(lo));
    while (hi - lo >= width) {
        Rational mid = (lo + hi) / 2;
        int s = sign(poly_(mid));
        if (s == 0) throw ConsistencyError("algebraic root is rational: " + to_string(mid));
        if (s == lo_sign)
            lo = mid;
        else
            hi = mid;
    }
    return AlgebraicRoot(poly_, lo, hi);
}

AlgebraicRoot AlgebraicRoot::scaled(const Rational& s) const {
    if (s == 0) throw DomainError("scaling an algebraic root by zero");
    Polynomial p = poly_.scale_argument(Rational(1 / s)).monic();
    if (s > 0) return AlgebraicRoot(p, lo_ * s, hi_ * s);
    return AlgebraicRoot(p, hi_ * s, lo_ * s);
}

int AlgebraicRoot::compare(const Rational& x) const {
    if (x <= lo_) return 1;
    if (x >= hi_) return -1;
    int sx = sign(poly_(x));
    if (sx == 0) throw ConsistencyError("algebraic root is rational: " + to_string(x));
    return sx == sign(poly_(lo_)) ? 1 : -1;
}

std::string AlgebraicRoot::decimal_bounds(int digits) const {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    AlgebraicRoot tight = refined(make_rational(1, scale));
    return "[" + to_decimal(tight.lo(), digits, Rounding::Down) + ", " + to_decimal(tight.hi(), digits, Rounding::Up) +
           "]";
}

bool is_rational(const RealRoot& r) { return std::holds_alternative<Rational>(r); }

Rational approximate(const RealRoot& r) {
    if (const auto* q = std::get_if<Rational>(&r)) return *q;
    const auto& a = std::get<AlgebraicRoot>(r);
    return (a.lo() + a.hi()) / 2;
}

int compare(const RealRoot& r, const Rational& x) {
    if (const auto* q = std::get_if<Rational>(&r)) return sign(Rational(*q - x));
    return std::get<AlgebraicRoot>(r).compare(x);
}

std::string to_string(const RealRoot& r, int digits) {
    if (const auto* q = std::get_if<Rational>(&r)) return to_string(*q);
    const auto& a = std::get<AlgebraicRoot>(r);
    return "root of " + a.poly().primitive_integer_part().to_string() + " in " + a.decimal_bounds(digits);
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    Polynomial d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign(p(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

namespace {

// Removes the (simple) root at x from a square-free polynomial, if present.
Polynomial strip_root(const Polynomial& q, const Rational& x) {
    if (q.degree() < 1 || q(x) != 0) return q;
    return divmod(q, Polynomial::linear(-x, 1)).first;
}

}  // namespace

int count_roots_open(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw DomainError("count_roots_open requires lo < hi");
    if (p.is_zero()) throw DomainError("the zero polynomial vanishes everywhere");
    Polynomial q = strip_root(strip_root(square_free_part(p), lo), hi);
    if (q.degree() < 1) return 0;
    auto chain = sturm_chain(q);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

bool sturm_positive_on(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) return false;
    if (count_roots_open(p, lo, hi) != 0) return false;
    return p((lo + hi) / 2) > 0;
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.degree() < 1) return 1;
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = p.coeff(i) / p.leading();
        if (r < 0) r = -r;
        m = std::max(m, r);
    }
    return m + 1;
}

namespace {

struct Interval {
    Polynomial poly;
    Rational lo, hi;
};

// Bisection on Sturm counts. A root hit exactly at a midpoint is recorded and
// divided out, so every interval handed on has nonroot endpoints.
void isolate(const Polynomial& q, const std::vector<Polynomial>& chain, const Rational& lo, const Rational& hi,
             int vlo, int vhi, std::vector<Interval>& intervals, std::vector<Rational>& exact) {
    int n = vlo - vhi;
    if (n == 0) return;
    if (n == 1) {
        intervals.push_back({q, lo, hi});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (q(mid) == 0) {
        exact.push_back(mid);
        Polynomial reduced = strip_root(q, mid);
        auto rchain = sturm_chain(reduced);
        int vmid = sign_variations(rchain, mid);
        isolate(reduced, rchain, lo, mid, sign_variations(rchain, lo), vmid, intervals, exact);
        isolate(reduced, rchain, mid, hi, vmid, sign_variations(rchain, hi), intervals, exact);
        return;
    }
    int vm = sign_variations(chain, mid);
    isolate(q, chain, lo, mid, vlo, vm, intervals, exact);
    isolate(q, chain, mid, hi, vm, vhi, intervals, exact);
}

// Resolves an isolating interval of the square-free q into an exact rational
// root when one exists, else an AlgebraicRoot refined to `width`.
RealRoot resolve(const Polynomial& q, const Integer& lead, Rational lo, Rational hi, const Rational& width) {
    int lo_sign = sign(q(lo));
    Rational grid = make_rational(1, lead);
    auto bisect_until = [&](const Rational& w) -> std::optional<Rational> {
        while (hi - lo >= w) {
            Rational mid = (lo + hi) / 2;
            int s = sign(q(mid));
            if (s == 0) return mid;
            if (s == lo_sign)
                lo = mid;
            else
                hi = mid;
        }
        return std::nullopt;
    };
    if (auto hit = bisect_until(grid)) return *hit;
    // Any rational root u/v has v | lead, so it is a multiple of 1/lead; the
    // interval is now narrower than 1/lead and holds at most one such point.
    Rational candidate = make_rational(ceil(Rational(lo * Rational(lead))), lead);
    if (lo < candidate && candidate < hi && q(candidate) == 0) return candidate;
    if (auto hit = bisect_until(width)) return *hit;
    return AlgebraicRoot(q, lo, hi);
}

}  // namespace

std::vector<RealRoot> real_roots(const Polynomial& p, const Rational& width) {
    if (p.is_zero()) throw DomainError("real_roots of the zero polynomial");
    Polynomial q = square_free_part(p).primitive_integer_part();
    std::vector<RealRoot> out;
    if (q.degree() < 1) return out;
    Rational bound = cauchy_root_bound(q);
    auto chain = sturm_chain(q);
    std::vector<Interval> intervals;
    std::vector<Rational> exact;
    isolate(q, chain, -bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound), intervals, exact);
    for (const auto& r : exact) out.emplace_back(r);
    for (const auto& iv : intervals) {
        Polynomial prim = iv.poly.primitive_integer_part();
        out.push_back(resolve(prim, prim.leading().get_num(), iv.lo, iv.hi, width));
    }
    std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) {
        // Distinct roots: compare by a point separating them.
        if (is_rational(y)) return compare(x, std::get<Rational>(y)) < 0;
        return compare(y, approximate(x)) > 0;
    });
    return out;
}

std::vector<RealRoot> solve_quadratic_rational(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0) throw DomainError("degenerate quadratic: leading coefficient is zero");
    Rational disc = b * b - 4 * a * c;
    if (disc < 0) return {};
    if (disc == 0) return {Rational(-b / (2 * a))};
    if (auto root = rational_sqrt_exact(disc)) {
        Rational r1 = (-b - *root) / (2 * a), r2 = (-b + *root) / (2 * a);
        if (r2 < r1) std::swap(r1, r2);
        return {r1, r2};
    }
    return real_roots(Polynomial({c, b, a}));
}

std::vector<RealRoot> cubic_real_roots(const Polynomial& p, const Rational& width) {
    if (p.degree() != 3) throw DomainError("cubic_real_roots needs degree 3, got " + std::to_string(p.degree()));
    return real_roots(p, width);
}

}  // namespace sejoin
