#pragma once

// Orbifold Calabi data on the quotient Bott orbifold, the Kahler-Einstein
// conditions and the momentum profile Theta(z) = F(z) / (1 + r3 z)^2.

#include <string>
#include <vector>

#include "sejoin/join.hpp"

namespace sejoin {

// (w1 vinf - w2 v0) / (w1 vinf + w2 v0). Throws DomainError when zero.
Rational r3_from_ray(const Integer& w1, const Integer& w2, const Integer& v3_0, const Integer& v3_inf);

struct CalabiData {
    Integer a, m2_0, m2_inf, fano_index;
    Integer m3_0, m3_inf;
    Integer m3;           // gcd(m3_0, m3_inf)
    Integer v3_0, v3_inf;  // m3_x / m3
    Integer n;
    Rational r3;
};

// Derives m3 and the core ray from (m3_0, m3_inf). Throws DomainError unless
// n != 0, gcd(n, m3) = 1, 0 < |r3| < 1 and sign(r3) = sign(n).
CalabiData make_calabi_data(const YpqEinstein& ypq, const Integer& m3_0, const Integer& m3_inf, const Integer& n,
                            const Rational& r3);

// From a quotient built on a quasi-regular Reeb ray.
CalabiData calabi_data(const JoinSpec& spec, const ReebRay& ray, const JoinQuotient& quotient);

// R(z) = (1 - z) / m3_inf - (1 + z) / m3_0
Polynomial boundary_slope(const CalabiData& d);

struct KEConditions {
    bool ke1 = false;
    bool ke2 = false;
};

// ke1: 2 r3 I / n = (1 + r3) / m3_inf + (1 - r3) / m3_0.
// ke2: the integral of (1 + r3 z)^2 R(z) over [-1, 1] vanishes.
KEConditions ke_conditions(const CalabiData& d);

struct CalabiProfile {
    Rational r3;
    Polynomial F;  // degree <= 4

    Polynomial denominator() const;  // (1 + r3 z)^2
    Rational theta(const Rational& z) const;
    Rational theta_prime(const Rational& z) const;
};

// F(z) = integral from -1 to z of (1 + r3 t)^2 R(t) dt. Throws DomainError
// unless both KE conditions hold, ConsistencyError unless F > 0 on (-1, 1).
CalabiProfile ke_profile(const CalabiData& d);

struct MetricComponents {
    Rational base_scale;  // (1/r3 + z) n
    Rational dz2;         // 1 / Theta
    Rational theta2;      // Theta
};

// Throws DomainError for |z| >= 1, ConsistencyError when Theta(z) = 0 or the
// base scale is not positive.
MetricComponents metric_components(const CalabiProfile& profile, const Integer& n, const Rational& z);

// Plain-text dump: coefficients of F as fractions, then one "z  Theta(z)" row
// per point of the uniform grid -1, -1 + 2/N, ..., 1. With digits > 0 each
// Theta value is also rendered as a decimal.
std::string profile_table(const CalabiProfile& profile, int grid, int digits = 0);

}  // namespace sejoin
