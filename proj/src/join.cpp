#include "sejoin/join.hpp"

#include <string>

#include "sejoin/errors.hpp"

namespace sejoin {

namespace {

std::string w_label(const Integer& w1, const Integer& w2) { return "w=(" + w1.get_str() + "," + w2.get_str() + ")"; }

void validate_w(const Integer& w1, const Integer& w2) {
    if (w2 <= 0 || w1 <= w2) throw DomainError(w_label(w1, w2) + ": need w1 > w2 > 0");
    if (gcd(w1, w2) != 1) throw DomainError(w_label(w1, w2) + ": weights must be coprime");
}

}  // namespace

JoinSpec make_join_spec(const YpqEinstein& ypq, const Integer& l1, const Integer& l2, const Integer& w1,
                        const Integer& w2) {
    validate_w(w1, w2);
    if (l1 <= 0 || l2 <= 0) throw DomainError("join: l1, l2 must be positive");
    if (gcd(l1, ypq.m2) != 1)
        throw DomainError("join: l1=" + l1.get_str() + " not normalized against m2=" + ypq.m2.get_str());
    if (gcd(l1, Integer(l2 * ypq.m2)) != 1) throw DomainError("join: gcd(l1, l2 m2) != 1");
    return {ypq, l1, l2, w1, w2};
}

std::pair<Integer, Integer> canonical_l(const Integer& w1, const Integer& w2, const Integer& fano_index) {
    validate_w(w1, w2);
    if (fano_index < 1) throw DomainError("canonical_l: index must be positive");
    Integer norm = w1 + w2;
    Integer g = gcd(norm, fano_index);
    return {fano_index / g, norm / g};
}

JoinSpec canonical_join(const YpqEinstein& ypq, const Integer& w1, const Integer& w2) {
    auto [l1, l2] = canonical_l(w1, w2, ypq.fano_index);
    return make_join_spec(ypq, l1, l2, w1, w2);
}

SmoothnessReport smoothness_check(const JoinSpec& spec) {
    SmoothnessReport r;
    for (bool at_inf : {false, true}) {
        Integer lhs = spec.l2 * spec.ypq.m2 * (at_inf ? spec.ypq.v2_inf : spec.ypq.v2_0);
        for (int j : {1, 2}) {
            Integer g = gcd(lhs, Integer(spec.l1 * (j == 1 ? spec.w1 : spec.w2)));
            if (g != 1) {
                r.smooth = false;
                r.witnesses.push_back({at_inf, j, g});
            }
        }
    }
    return r;
}

Polynomial se_cubic(const Integer& w1, const Integer& w2) {
    return Polynomial({Rational(-3 * w1), Rational(-(2 * w1 - w2)), Rational(2 * w2 - w1), Rational(3 * w2)});
}

ReebRay se_ray_from_w(const Integer& w1, const Integer& w2) {
    validate_w(w1, w2);
    std::vector<RealRoot> above;
    for (auto& r : cubic_real_roots(se_cubic(w1, w2)))
        if (compare(r, 1) > 0) above.push_back(std::move(r));
    if (above.size() != 1)
        throw ConsistencyError(w_label(w1, w2) + ": expected exactly one root of the cubic in (1,inf), found " +
                               std::to_string(above.size()));
    ReebRay ray{above.front(), above.front(), false, 0, 0};
    Rational scale = make_rational(w2, w1);
    if (const auto* k = std::get_if<Rational>(&ray.k)) {
        Rational ratio = *k * scale;
        ray.ratio = ratio;
        ray.quasi_regular = true;
        ray.v3_0 = ratio.get_den();
        ray.v3_inf = ratio.get_num();
        if (!verify_se_ray(w1, w2, ray.v3_0, ray.v3_inf))
            throw ConsistencyError(w_label(w1, w2) + ": rational ray fails the Einstein integral");
    } else {
        ray.ratio = std::get<AlgebraicRoot>(ray.k).scaled(scale);
    }
    return ray;
}

std::pair<Integer, Integer> w_from_k(const Rational& k) {
    if (k <= 1) throw DomainError("w_from_k: need k > 1, got " + to_string(k));
    Rational ratio = (3 + 2 * k + k * k) / (k * (1 + 2 * k + 3 * k * k));
    Integer w1 = ratio.get_den(), w2 = ratio.get_num();
    if (w1 <= w2) throw ConsistencyError("w_from_k: w1 <= w2 at k=" + to_string(k));
    return {w1, w2};
}

Polynomial se_integrand(const Integer& w1, const Integer& w2, const Integer& v3_0, const Integer& v3_inf) {
    Polynomial fiber = Polynomial::linear(Rational(v3_0 - v3_inf), Rational(-(v3_0 + v3_inf)));
    Polynomial weight = Polynomial::linear(Rational(w1 * v3_inf + w2 * v3_0), Rational(w1 * v3_inf - w2 * v3_0));
    return fiber * weight * weight;
}

bool verify_se_ray(const Integer& w1, const Integer& w2, const Integer& v3_0, const Integer& v3_inf) {
    return integrate_sym(se_integrand(w1, w2, v3_0, v3_inf)) == 0;
}

BottOrbifold JoinQuotient::orbifold() const {
    Ramification r;
    for (int i = 0; i < 6; ++i) r[i] = Rational(m[i]);
    return make_bott_orbifold({a, b, c}, r);
}

JoinQuotient quotient_orbifold(const JoinSpec& spec, const ReebRay& ray) {
    if (!ray.quasi_regular) throw DomainError("quotient_orbifold: irregular Reeb ray has no quotient");
    const YpqEinstein& y = spec.ypq;
    Integer diff = spec.w1 * ray.v3_inf - spec.w2 * ray.v3_0;
    if (diff == 0) throw DomainError("quotient_orbifold: degenerate ray, n = 0");
    JoinQuotient jq;
    jq.s = gcd(abs(diff), spec.l2);
    jq.m3 = spec.l2 / jq.s;
    jq.n = spec.l1 * (diff / jq.s);
    jq.b_hat = require_integral(make_rational((2 * y.m2 * y.v2_0 + y.a) * y.v2_inf, y.fano_index), "b_hat");
    jq.c_hat = require_integral(make_rational(y.v2_0 + y.v2_inf, y.fano_index), "c_hat");
    jq.a = y.a;
    jq.b = jq.n * jq.b_hat;
    jq.c = jq.n * jq.c_hat;
    jq.m = {1, 1, y.m2_0, y.m2_inf, jq.m3 * ray.v3_0, jq.m3 * ray.v3_inf};
    return jq;
}

CohClass pullback_class(const JoinQuotient& quotient) {
    return {Basis::X1X2X3, {Rational(quotient.b), Rational(quotient.c), Rational(0)}};
}

JoinSpec family_join(const Integer& t) {
    if (t < 0) throw DomainError("family_join: t must be non-negative");
    return canonical_join(family_member(Integer(255 * t + 10)), 17, 3);
}

}  // namespace sejoin
