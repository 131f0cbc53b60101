#include "sejoin/metric.hpp"

#include <sstream>

#include "sejoin/errors.hpp"
#include "sejoin/kernel/roots.hpp"

namespace sejoin {

Rational r3_from_ray(const Integer& w1, const Integer& w2, const Integer& v3_0, const Integer& v3_inf) {
    for (const auto* x : {&w1, &w2, &v3_0, &v3_inf})
        if (*x <= 0) throw DomainError("r3_from_ray: parameters must be positive");
    Integer num = w1 * v3_inf - w2 * v3_0;
    if (num == 0) throw DomainError("r3_from_ray: degenerate Kahler class, r3 = 0");
    Rational r3 = make_rational(num, Integer(w1 * v3_inf + w2 * v3_0));
    if (abs(r3.get_num()) >= r3.get_den()) throw ConsistencyError("r3_from_ray: |r3| >= 1");
    return r3;
}

CalabiData make_calabi_data(const YpqEinstein& ypq, const Integer& m3_0, const Integer& m3_inf, const Integer& n,
                            const Rational& r3) {
    if (m3_0 <= 0 || m3_inf <= 0) throw DomainError("Calabi data: ramification must be positive");
    CalabiData d;
    d.a = ypq.a;
    d.m2_0 = ypq.m2_0;
    d.m2_inf = ypq.m2_inf;
    d.fano_index = ypq.fano_index;
    d.m3_0 = m3_0;
    d.m3_inf = m3_inf;
    d.m3 = gcd(m3_0, m3_inf);
    d.v3_0 = m3_0 / d.m3;
    d.v3_inf = m3_inf / d.m3;
    d.n = n;
    d.r3 = r3;
    if (n == 0) throw DomainError("Calabi data: n = 0");
    if (gcd(n, d.m3) != 1) throw DomainError("Calabi data: gcd(n, m3) != 1");
    if (r3 == 0 || abs(r3.get_num()) >= r3.get_den()) throw DomainError("Calabi data: need 0 < |r3| < 1");
    if (sign(r3) != sign(n)) throw DomainError("Calabi data: r3 and n must have the same sign");
    return d;
}

CalabiData calabi_data(const JoinSpec& spec, const ReebRay& ray, const JoinQuotient& quotient) {
    Rational r3 = r3_from_ray(spec.w1, spec.w2, ray.v3_0, ray.v3_inf);
    return make_calabi_data(spec.ypq, quotient.m[4], quotient.m[5], quotient.n, r3);
}

Polynomial boundary_slope(const CalabiData& d) {
    Rational p = 1 / Rational(d.m3_inf), q = 1 / Rational(d.m3_0);
    return Polynomial::linear(p - q, -p - q);
}

namespace {

Polynomial ke2_integrand(const CalabiData& d) {
    Polynomial lin = Polynomial::linear(1, d.r3);
    return lin * lin * boundary_slope(d);
}

}  // namespace

KEConditions ke_conditions(const CalabiData& d) {
    KEConditions k;
    Rational lhs = 2 * d.r3 * d.fano_index / Rational(d.n);
    Rational rhs = (1 + d.r3) / Rational(d.m3_inf) + (1 - d.r3) / Rational(d.m3_0);
    k.ke1 = lhs == rhs;
    k.ke2 = integrate_sym(ke2_integrand(d)) == 0;
    return k;
}

Polynomial CalabiProfile::denominator() const {
    Polynomial lin = Polynomial::linear(1, r3);
    return lin * lin;
}

Rational CalabiProfile::theta(const Rational& z) const { return F(z) / denominator()(z); }

Rational CalabiProfile::theta_prime(const Rational& z) const {
    Polynomial den = denominator();
    Rational dz = den(z);
    return (F.derivative()(z) * dz - F(z) * den.derivative()(z)) / (dz * dz);
}

CalabiProfile ke_profile(const CalabiData& d) {
    KEConditions k = ke_conditions(d);
    if (!k.ke1 || !k.ke2) throw DomainError("ke_profile: Kahler-Einstein conditions fail");
    Polynomial prim = ke2_integrand(d).primitive();
    CalabiProfile profile{d.r3, prim - Polynomial::constant(prim(-1))};
    if (profile.F(1) != 0) throw ConsistencyError("ke_profile: F(1) != 0 although KE2 holds");
    if (!sturm_positive_on(profile.F, -1, 1)) throw ConsistencyError("ke_profile: F is not positive on (-1, 1)");
    return profile;
}

MetricComponents metric_components(const CalabiProfile& profile, const Integer& n, const Rational& z) {
    if (z <= -1 || z >= 1) throw DomainError("metric_components: need |z| < 1");
    Rational th = profile.theta(z);
    if (th == 0) throw ConsistencyError("metric_components: Theta vanishes inside (-1, 1)");
    MetricComponents m{(1 / profile.r3 + z) * n, 1 / th, th};
    if (m.base_scale <= 0) throw ConsistencyError("metric_components: base scale not positive");
    return m;
}

std::string profile_table(const CalabiProfile& profile, int grid, int digits) {
    if (grid < 1) throw DomainError("profile_table: grid must be at least 1");
    std::ostringstream out;
    out << "# r3 = " << to_string(profile.r3) << "\n";
    out << "# F(z) = " << profile.F.to_string("z") << "\n";
    for (int i = 0; i <= profile.F.degree(); ++i) out << "# F[" << i << "] = " << to_string(profile.F.coeff(i)) << "\n";
    out << "# z\tTheta(z)" << (digits > 0 ? "\tdecimal" : "") << "\n";
    for (int i = 0; i <= grid; ++i) {
        Rational z = -1 + make_rational(2 * i, grid);
        Rational th = profile.theta(z);
        out << to_string(z) << "\t" << to_string(th);
        if (digits > 0) out << "\t" << to_decimal(th, digits);
        out << "\n";
    }
    return out.str();
}

}  // namespace sejoin
