#include "doctest.h"
#include "oracles.hpp"
#include "sejoin/errors.hpp"
#include "sejoin/kernel/roots.hpp"
#include "sejoin/metric.hpp"

using namespace sejoin;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

CalabiData y13_8_data() { return make_calabi_data(solve_ypq(13, 8), 255, 165, 748, q(1, 3)); }

CalabiData family_data(long t) {
    JoinSpec spec = t < 0 ? make_join_spec(family_member(0), 1, 4, 17, 3) : family_join(t);
    ReebRay ray = se_ray_from_w(spec.w1, spec.w2);
    return calabi_data(spec, ray, quotient_orbifold(spec, ray));
}

// Closed form of the second condition: with P = 1/m3_inf - 1/m3_0 and
// Q = 1/m3_inf + 1/m3_0, 3P + P r^2 - 2 r Q = 0.
Rational ke2_closed(const CalabiData& d) {
    Rational P = 1 / Rational(d.m3_inf) - 1 / Rational(d.m3_0);
    Rational Q = 1 / Rational(d.m3_inf) + 1 / Rational(d.m3_0);
    return 3 * P + P * d.r3 * d.r3 - 2 * d.r3 * Q;
}

}  // namespace

TEST_CASE("r3_from_ray") {
    CHECK(r3_from_ray(34, 11, 17, 11) == q(1, 3));
    CHECK(r3_from_ray(17, 3, 17, 9) == q(1, 2));
    CHECK_THROWS_AS(r3_from_ray(1, 1, 1, 1), DomainError);
}

TEST_CASE("make_calabi_data validation") {
    auto y = solve_ypq(13, 8);
    auto d = make_calabi_data(y, 255, 166, 748, q(1, 3));
    CHECK(d.m3 == 1);
    CHECK(d.v3_0 == 255);
    CHECK_THROWS_AS(make_calabi_data(y, 255, 165, 0, q(1, 3)), DomainError);
    CHECK_THROWS_AS(make_calabi_data(y, 255, 165, 750, q(1, 3)), DomainError);  // gcd(750, 15) = 15
    CHECK_THROWS_AS(make_calabi_data(y, 255, 165, 748, q(-1, 3)), DomainError);
    CHECK_THROWS_AS(make_calabi_data(y, 255, 165, 748, q(1)), DomainError);
    CHECK_THROWS_AS(make_calabi_data(y, 255, 165, 748, q(0)), DomainError);
}

TEST_CASE("ke_conditions") {
    auto d = y13_8_data();
    auto k = ke_conditions(d);
    CHECK(k.ke1);
    CHECK(k.ke2);
    CHECK(2 * d.r3 * 12 / 748 == q(2, 187));
    CHECK(q(4, 495) + q(2, 765) == q(2, 187));

    for (long t : {-1L, 1L, 2L, 7L}) {
        auto f = family_data(t);
        CHECK(f.r3 == q(1, 2));
        CHECK(f.m3_0 == 34);
        CHECK(f.m3_inf == 18);
        if (t >= 0) {
            Integer T(t);
            CHECK(f.fano_index == 5 * (306 * T + 13));
            CHECK(f.n == 51 * (306 * T + 13));
        }
        CHECK(2 * f.r3 * f.fano_index / Rational(f.n) == q(5, 51));
        auto kf = ke_conditions(f);
        CHECK(kf.ke1);
        CHECK(kf.ke2);
    }

    auto bad = make_calabi_data(solve_ypq(13, 8), 255, 166, 748, q(1, 3));
    auto kb = ke_conditions(bad);
    CHECK_FALSE(kb.ke1);
    CHECK_FALSE(kb.ke2);
}

TEST_CASE("ke2 matches its closed form on random data") {
    auto y = solve_ypq(13, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        Integer m0 = oracle::uniform(1, 500), mi = oracle::uniform(1, 500);
        Integer g = gcd(m0, mi);
        Integer n = oracle::uniform(1, 3000);
        if (gcd(n, g) != 1) continue;
        Rational r = make_rational(oracle::uniform(1, 98), 99);
        auto d = make_calabi_data(y, m0, mi, n, r);
        CHECK(ke_conditions(d).ke2 == (ke2_closed(d) == 0));
    }
}

TEST_CASE("ke_profile on the family") {
    auto p = ke_profile(family_data(-1));
    Polynomial expected = Polynomial({q(5, 144), q(4, 153), q(-9, 2 * 153), q(-4, 153), q(-13, 16 * 153)});
    CHECK(p.F == expected);
    CHECK(p.F(-1) == 0);
    CHECK(p.F(1) == 0);
    CHECK(p.theta_prime(-1) == q(1, 9));
    CHECK(p.theta_prime(1) == q(-1, 17));
    CHECK(sturm_positive_on(p.F, -1, 1));
}

TEST_CASE("ke_profile invariants on verified data") {
    std::vector<CalabiData> all = {y13_8_data(), family_data(-1), family_data(3)};
    all.push_back(make_calabi_data(solve_ypq(13, 7), 765, 495, 1309, q(1, 3)));
    for (const auto& d : all) {
        auto p = ke_profile(d);
        Polynomial lin = Polynomial::linear(1, d.r3);
        Polynomial R = boundary_slope(d);
        CHECK(p.F.derivative() == lin * lin * R);
        CHECK(p.F.degree() <= 4);
        CHECK(p.F(-1) == 0);
        CHECK(p.F(1) == 0);
        CHECK(p.theta_prime(-1) == 2 / Rational(d.m3_inf));
        CHECK(p.theta_prime(1) == -2 / Rational(d.m3_0));
        CHECK(R(-1) == 2 / Rational(d.m3_inf));
        CHECK(sturm_positive_on(p.F, -1, 1));
        // Simple zeros at the ends.
        CHECK(p.F.derivative()(-1) != 0);
        CHECK(p.F.derivative()(1) != 0);
        for (int i = 1; i < 40; ++i) CHECK(p.theta(-1 + q(i, 20)) > 0);
    }
}

TEST_CASE("ke_profile rejects data failing the conditions") {
    auto bad = make_calabi_data(solve_ypq(13, 8), 255, 166, 748, q(1, 3));
    CHECK_THROWS_AS(ke_profile(bad), DomainError);
}

TEST_CASE("F(1) = 0 exactly when the second condition holds") {
    auto y = solve_ypq(13, 8);
    for (int trial = 0; trial < 300; ++trial) {
        Integer m0 = oracle::uniform(1, 300), mi = oracle::uniform(1, 300);
        if (gcd(m0, mi) != 1) continue;
        auto d = make_calabi_data(y, m0, mi, 1, make_rational(oracle::uniform(1, 40), 41));
        Polynomial lin = Polynomial::linear(1, d.r3);
        Polynomial prim = (lin * lin * boundary_slope(d)).primitive();
        Rational F1 = prim(1) - prim(-1);
        CHECK((F1 == 0) == ke_conditions(d).ke2);
    }
}

TEST_CASE("metric_components") {
    auto fd = family_data(-1);
    auto p = ke_profile(fd);
    auto mc = metric_components(p, fd.n, 0);
    CHECK(mc.base_scale == 2 * fd.n);
    CHECK(mc.theta2 == q(5, 144));
    CHECK(mc.dz2 == q(144, 5));
    CHECK_THROWS_AS(metric_components(p, fd.n, 1), DomainError);
    CHECK_THROWS_AS(metric_components(p, fd.n, -1), DomainError);
    // Theta tends to 0 at the ends.
    CHECK(p.theta(q(999999, 1000000)) < q(1, 100000));
    CHECK(p.theta(q(-999999, 1000000)) < q(1, 100000));

    auto yd = y13_8_data();
    mc = metric_components(ke_profile(yd), 748, 0);
    CHECK(mc.base_scale == 2244);
}

TEST_CASE("profile_table") {
    auto p = ke_profile(family_data(-1));
    std::string t = profile_table(p, 4);
    CHECK(t.find("# r3 = 1/2") != std::string::npos);
    CHECK(t.find("0\t5/144\n") != std::string::npos);
    CHECK(t.find("-1\t0\n") != std::string::npos);
    CHECK(t.find("\n1\t0\n") != std::string::npos);
    std::string dec = profile_table(p, 2, 50);
    CHECK(dec.find("0.03472222222222222222222222222222222222222222222222") != std::string::npos);
    CHECK_THROWS_AS(profile_table(p, 0), DomainError);
}
