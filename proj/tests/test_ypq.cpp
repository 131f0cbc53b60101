#include "doctest.h"
#include "oracles.hpp"
#include "sejoin/errors.hpp"
#include "sejoin/ypq.hpp"

using namespace sejoin;

namespace {

// Hand integration of a product of two linear forms over [-1, 1]:
// int (c0 + c1 z)(d0 + d1 z) dz = 2 c0 d0 + (2/3) c1 d1.
Rational einstein_integral_by_hand(long p, long q, long v0, long vinf) {
    long c0 = v0 - vinf, c1 = -(v0 + vinf);
    long d0 = (p + q) * vinf + (p - q) * v0, d1 = (p + q) * vinf - (p - q) * v0;
    return Rational(2 * c0 * d0) + make_rational(2 * c1 * d1, 3);
}

}  // namespace

TEST_CASE("is_quasi_regular") {
    CHECK(is_quasi_regular(13, 8));
    CHECK_FALSE(is_quasi_regular(13, 5));
    CHECK(is_quasi_regular(7, 3));
    int count = 0;
    for (int q = 1; q < 13; ++q)
        if (is_quasi_regular(13, q)) {
            ++count;
            CHECK((q == 7 || q == 8));
        }
    CHECK(count == 2);
    CHECK_THROWS_AS(is_quasi_regular(8, 8), DomainError);
    CHECK_THROWS_AS(is_quasi_regular(9, 3), DomainError);
    CHECK_THROWS_AS(is_quasi_regular(5, 0), DomainError);
    CHECK_THROWS_AS(is_quasi_regular(3, 5), DomainError);
}

TEST_CASE("einstein_ray") {
    CHECK(einstein_ray(13, 8) == std::pair<Integer, Integer>(7, 5));
    CHECK(einstein_ray(13, 7) == std::pair<Integer, Integer>(4, 3));
    CHECK(einstein_ray(7, 3) == std::pair<Integer, Integer>(5, 4));
    CHECK_THROWS_AS(einstein_ray(13, 5), DomainError);
    // Expanded integrand for (13,7) on ray (4,3).
    CHECK(einstein_integrand(13, 7, 4, 3) == Polynomial({84, -552, -252}));
}

TEST_CASE("hirzebruch_quotient") {
    auto h = hirzebruch_quotient(13, 8, 7, 5);
    CHECK(h.m2 == 13);
    CHECK(h.m2_0 == 91);
    CHECK(h.m2_inf == 65);
    CHECK(h.a == 70);
    h = hirzebruch_quotient(13, 7, 4, 3);
    CHECK((h.m2 == 13 && h.m2_0 == 52 && h.m2_inf == 39 && h.a == 36));
    h = hirzebruch_quotient(7, 3, 5, 4);
    CHECK((h.m2 == 7 && h.m2_0 == 35 && h.m2_inf == 28 && h.a == 20));
    CHECK_THROWS_AS(hirzebruch_quotient(13, 8, 14, 10), DomainError);
}

TEST_CASE("fano_index") {
    CHECK(fano_index(13, 7, 5, 70) == 12);
    CHECK(fano_index(13, 4, 3, 36) == 7);
    CHECK(fano_index(7, 3, 2, 18) == 5);
}

TEST_CASE("family_member") {
    auto y0 = family_member(0);
    CHECK((y0.p == 7 && y0.q == 5 && y0.v2_0 == 3 && y0.v2_inf == 2 && y0.m2 == 7 && y0.a == 18 &&
           y0.fano_index == 5));
    auto y1 = family_member(1);
    CHECK((y1.p == 37 && y1.q == 33));
    auto y10 = family_member(10);
    CHECK((y10.p == 1387 && y10.q == 1365 && y10.fano_index == 65));
    CHECK_THROWS_AS(family_member(-1), DomainError);
}

TEST_CASE("family closed forms agree with the generic pipeline for k2 = 0..50") {
    for (long k = 0; k <= 50; ++k) {
        long p = 12 * k * k + 18 * k + 7, q = 12 * k * k + 16 * k + 5;
        auto y = family_member(k);
        auto g = solve_ypq(p, q);
        REQUIRE(y == g);
        CHECK(g.v2_0 == 3 + 4 * k);
        CHECK(g.v2_inf == 2 * (1 + k));
        CHECK(g.m2_0 == Integer(p) * (3 + 4 * k));
        CHECK(g.a == 6 * (1 + k) * (1 + 2 * k) * (3 + 4 * k));
        CHECK(g.fano_index == 5 + 6 * k);
    }
}

TEST_CASE("every quasi-regular pair with p <= 200 solves the Einstein condition") {
    int found = 0;
    for (long p = 2; p <= 200; ++p)
        for (long q = 1; q < p; ++q) {
            if (oracle::gcd_l(p, q) != 1) continue;
            long l = oracle::gcd_l(p + q, p - q);
            long alpha = (p + q) / l, beta = (p - q) / l;
            long disc4 = 4 * p * p - 3 * q * q;
            // Discriminant of 2b t^2 + (a-b) t - 2a equals 4 (4p^2 - 3q^2) / l^2.
            REQUIRE((alpha - beta) * (alpha - beta) + 16 * alpha * beta == 4 * disc4 / (l * l));
            bool square = oracle::is_square_by_search(disc4);
            CHECK(is_quasi_regular(p, q) == square);
            if (!square) {
                CHECK_THROWS_AS(einstein_ray(p, q), DomainError);
                continue;
            }
            ++found;
            auto y = solve_ypq(p, q);
            long v0 = y.v2_0.get_si(), vinf = y.v2_inf.get_si();
            CHECK(oracle::gcd_l(v0, vinf) == 1);
            CHECK(einstein_integral_by_hand(p, q, v0, vinf) == 0);
            CHECK(integrate_sym(einstein_integrand(p, q, y.v2_0, y.v2_inf)) == 0);
            CHECK((y.l == 1 || y.l == 2));
            CHECK(y.m2_0 == y.m2 * y.v2_0);
            CHECK(Integer(p) * y.a == Integer(p + q) * y.m2_inf - Integer(p - q) * y.m2_0);
        }
    CHECK(found > 10);
}

TEST_CASE("homogeneous S2 x S3") {
    auto h = homogeneous_s2xs3();
    CHECK((h.p == 1 && h.q == 0 && h.v2_0 == 1 && h.v2_inf == 1 && h.m2 == 1 && h.l == 1));
    CHECK(h.fano_index == 2);
}
