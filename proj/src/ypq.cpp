#include "sejoin/ypq.hpp"

#include <string>

#include "sejoin/errors.hpp"
#include "sejoin/kernel/roots.hpp"

namespace sejoin {

namespace {

std::string pq_label(const Integer& p, const Integer& q) { return "Y^{" + p.get_str() + "," + q.get_str() + "}"; }

}  // namespace

void validate_ypq(const Integer& p, const Integer& q) {
    if (!(q >= 1 && p > q)) throw DomainError(pq_label(p, q) + ": need p > q >= 1");
    if (gcd(p, q) != 1) throw DomainError(pq_label(p, q) + ": p and q must be coprime");
}

bool is_quasi_regular(const Integer& p, const Integer& q) {
    validate_ypq(p, q);
    return integer_sqrt_exact(Integer(4 * p * p - 3 * q * q)).has_value();
}

Polynomial einstein_integrand(const Integer& p, const Integer& q, const Integer& v2_0, const Integer& v2_inf) {
    Polynomial fiber = Polynomial::linear(Rational(v2_0 - v2_inf), Rational(-(v2_0 + v2_inf)));
    Polynomial weight = Polynomial::linear(Rational((p + q) * v2_inf + (p - q) * v2_0),
                                           Rational((p + q) * v2_inf - (p - q) * v2_0));
    return fiber * weight;
}

std::pair<Integer, Integer> einstein_ray(const Integer& p, const Integer& q) {
    if (!is_quasi_regular(p, q)) throw DomainError(pq_label(p, q) + " is not quasi-regular");
    Integer l = gcd(Integer(p + q), Integer(p - q));
    Integer alpha = (p + q) / l, beta = (p - q) / l;
    // The vanishing integral, expanded in t = v2_0 / v2_inf and cleared of the
    // common factor 4 l / 3: 2 beta t^2 + (alpha - beta) t - 2 alpha = 0.
    auto roots = solve_quadratic_rational(Rational(2 * beta), Rational(alpha - beta), Rational(-2 * alpha));
    for (const auto& r : roots) {
        if (compare(r, 0) <= 0) continue;
        if (!is_rational(r)) throw ConsistencyError(pq_label(p, q) + ": quasi-regular but Einstein ray is irrational");
        const Rational& t = std::get<Rational>(r);
        Integer v0 = t.get_num(), vinf = t.get_den();
        if (integrate_sym(einstein_integrand(p, q, v0, vinf)) != 0)
            throw ConsistencyError(pq_label(p, q) + ": Einstein ray fails the integral condition");
        return {v0, vinf};
    }
    throw ConsistencyError(pq_label(p, q) + ": no positive Einstein ray");
}

HirzebruchQuotient hirzebruch_quotient(const Integer& p, const Integer& q, const Integer& v2_0, const Integer& v2_inf) {
    if (v2_0 <= 0 || v2_inf <= 0 || gcd(v2_0, v2_inf) != 1)
        throw DomainError("Reeb ray (" + v2_0.get_str() + "," + v2_inf.get_str() + ") must be coprime positive");
    Integer l = gcd(Integer(p + q), Integer(p - q));
    Integer alpha = (p + q) / l, beta = (p - q) / l;
    HirzebruchQuotient h;
    h.m2 = p / gcd(p, abs(Integer(alpha * v2_inf - beta * v2_0)));
    h.m2_0 = h.m2 * v2_0;
    h.m2_inf = h.m2 * v2_inf;
    h.a = require_integral(make_rational((p + q) * h.m2_inf - (p - q) * h.m2_0, p), "Hirzebruch degree a");
    return h;
}

Integer fano_index(const Integer& m2, const Integer& v2_0, const Integer& v2_inf, const Integer& a) {
    return gcd(Integer((2 * m2 * v2_0 + a) * v2_inf), Integer(v2_0 + v2_inf));
}

YpqEinstein solve_ypq(const Integer& p, const Integer& q) {
    auto [v0, vinf] = einstein_ray(p, q);
    HirzebruchQuotient h = hirzebruch_quotient(p, q, v0, vinf);
    YpqEinstein y;
    y.p = p;
    y.q = q;
    y.l = gcd(Integer(p + q), Integer(p - q));
    y.v2_0 = v0;
    y.v2_inf = vinf;
    y.m2 = h.m2;
    y.m2_0 = h.m2_0;
    y.m2_inf = h.m2_inf;
    y.a = h.a;
    y.fano_index = fano_index(h.m2, v0, vinf, h.a);
    return y;
}

YpqEinstein family_member(const Integer& k2) {
    if (k2 < 0) throw DomainError("family parameter k2 must be non-negative");
    const Integer& k = k2;
    Integer p = 12 * k * k + 18 * k + 7;
    Integer q = 12 * k * k + 16 * k + 5;
    YpqEinstein y = solve_ypq(p, q);
    auto expect = [&](const Integer& got, const Integer& want, const char* field) {
        if (got != want)
            throw ConsistencyError(std::string("family k2=") + k.get_str() + ": " + field + " = " + got.get_str() +
                                   ", closed form gives " + want.get_str());
    };
    expect(y.l, 2, "l");
    expect(y.m2, p, "m2");
    expect(y.m2_0, Integer(p * (3 + 4 * k)), "m2_0");
    expect(y.m2_inf, Integer(p * 2 * (1 + k)), "m2_inf");
    expect(y.a, Integer(6 * (1 + k) * (1 + 2 * k) * (3 + 4 * k)), "a");
    expect(y.fano_index, Integer(5 + 6 * k), "Fano index");
    return y;
}

YpqEinstein homogeneous_s2xs3() {
    YpqEinstein y;
    y.p = 1;
    y.q = 0;
    y.l = 1;
    y.v2_0 = y.v2_inf = 1;
    y.m2 = y.m2_0 = y.m2_inf = 1;
    y.a = 0;  // CP^1 x CP^1
    y.fano_index = fano_index(y.m2, y.v2_0, y.v2_inf, y.a);
    return y;
}

}  // namespace sejoin
