#pragma once

// Joins Y^{p,q} *_{l1,l2} S^3_w: Sasaki-Einstein Reeb rays, smoothness and
// the quotient Bott orbifold.

#include <array>
#include <utility>
#include <vector>

#include "sejoin/bott.hpp"
#include "sejoin/kernel/roots.hpp"
#include "sejoin/ypq.hpp"

namespace sejoin {

struct JoinSpec {
    YpqEinstein ypq;
    Integer l1, l2;
    Integer w1, w2;
};

// Throws DomainError unless l1, l2, w1, w2 > 0, gcd(w1, w2) = 1, w1 > w2,
// gcd(l1, m2) = 1 and gcd(l1, l2 m2) = 1.
JoinSpec make_join_spec(const YpqEinstein& ypq, const Integer& l1, const Integer& l2, const Integer& w1,
                        const Integer& w2);

// l1 = I / gcd(|w|, I), l2 = |w| / gcd(|w|, I) with |w| = w1 + w2.
std::pair<Integer, Integer> canonical_l(const Integer& w1, const Integer& w2, const Integer& fano_index);

// make_join_spec with canonical_l.
JoinSpec canonical_join(const YpqEinstein& ypq, const Integer& w1, const Integer& w2);

struct SmoothnessWitness {
    bool v2_inf;  // false: v2_0
    int j;        // 1 or 2
    Integer gcd;
};

struct SmoothnessReport {
    bool smooth = true;
    std::vector<SmoothnessWitness> witnesses;
};

// gcd(l2 m2 v2^i, l1 w_j) = 1 for i in {0, inf}, j in {1, 2}.
SmoothnessReport smoothness_check(const JoinSpec& spec);

// 3 w2 k^3 + (2 w2 - w1) k^2 - (2 w1 - w2) k - 3 w1
Polynomial se_cubic(const Integer& w1, const Integer& w2);

struct ReebRay {
    RealRoot k;      // root of se_cubic in (1, inf)
    RealRoot ratio;  // v3_inf / v3_0 = k w2 / w1
    bool quasi_regular = false;
    Integer v3_0, v3_inf;  // coprime; set only when quasi-regular
};

// Throws ConsistencyError unless se_cubic has exactly one root in (1, inf).
ReebRay se_ray_from_w(const Integer& w1, const Integer& w2);

// Coprime (w1, w2) with w2 / w1 = (3 + 2k + k^2) / (k (1 + 2k + 3k^2)).
// Throws DomainError for k <= 1.
std::pair<Integer, Integer> w_from_k(const Rational& k);

// ((v0 - vinf) - (v0 + vinf) z) ((w1 vinf + w2 v0) + (w1 vinf - w2 v0) z)^2
Polynomial se_integrand(const Integer& w1, const Integer& w2, const Integer& v3_0, const Integer& v3_inf);
bool verify_se_ray(const Integer& w1, const Integer& w2, const Integer& v3_0, const Integer& v3_inf);

struct JoinQuotient {
    Integer a, b, c;
    std::array<Integer, 6> m;  // (1, 1, m2_0, m2_inf, m3 v3_0, m3 v3_inf)
    Integer s, m3, n;
    Integer b_hat, c_hat;

    BottOrbifold orbifold() const;
};

// Throws DomainError for irregular rays or n = 0, ConsistencyError if
// b_hat or c_hat is not integral.
JoinQuotient quotient_orbifold(const JoinSpec& spec, const ReebRay& ray);

// b x1 + c x2 in the x-basis.
CohClass pullback_class(const JoinQuotient& quotient);

// Smooth family member k2 = 255 t + 10 joined with w = (17, 3).
JoinSpec family_join(const Integer& t);

}  // namespace sejoin
