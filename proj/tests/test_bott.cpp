#include "doctest.h"
#include "oracles.hpp"
#include "sejoin/bott.hpp"
#include "sejoin/errors.hpp"

using namespace sejoin;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

BottOrbifold unit_orbifold(long a, long b, long c) {
    return make_bott_orbifold({a, b, c}, {1, 1, 1, 1, 1, 1});
}

// Quotient of the Y^{13,8} join (Reeb ray (17,11), w = (34,11), l = (4,15)).
BottOrbifold y13_8_quotient() { return make_bott_orbifold({70, 78540, 748}, {1, 1, 91, 65, 255, 165}); }

// c1^orb = sum_j (y_j / m_j^0 + x_j / m_j^inf), with y1 = x1, y2 = a x1 + x2,
// y3 = b x1 + c x2 + x3 written out by hand in x-coordinates.
std::array<Rational, 3> c1_from_divisor_sum(const BottOrbifold& o) {
    const auto& m = o.m;
    Rational a(o.matrix.a), b(o.matrix.b), c(o.matrix.c);
    std::array<std::array<Rational, 3>, 3> y = {{{1, 0, 0}, {a, 1, 0}, {b, c, 1}}};
    std::array<Rational, 3> out = {1 / m[1], 1 / m[3], 1 / m[5]};
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out[k] += y[j][k] / m[2 * j];
    return out;
}

BottOrbifold random_orbifold(long abc_range, long m_num, long m_den) {
    BottMatrix A{oracle::uniform(-abc_range, abc_range), oracle::uniform(-abc_range, abc_range),
                 oracle::uniform(-abc_range, abc_range)};
    Ramification m;
    for (auto& v : m) v = make_rational(oracle::uniform(1, m_num), oracle::uniform(1, m_den));
    return make_bott_orbifold(A, m);
}

int rank_by_minors(const Matrix3& m) {
    if (determinant(m) != 0) return 3;
    for (int r1 = 0; r1 < 3; ++r1)
        for (int r2 = r1 + 1; r2 < 3; ++r2)
            for (int c1 = 0; c1 < 3; ++c1)
                for (int c2 = c1 + 1; c2 < 3; ++c2)
                    if (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1] != 0) return 2;
    for (const auto& row : m)
        for (const auto& v : row)
            if (v != 0) return 1;
    return 0;
}

}  // namespace

TEST_CASE("fan") {
    Fan f = fan({0, 0, 0});
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) CHECK(f.u[i][k] == -f.v[i][k]);
    f = fan({70, 78540, 748});
    CHECK(f.u[0] == LatticeVector{-1, -70, -78540});
    CHECK(f.u[1] == LatticeVector{0, -1, -748});
    CHECK(f.u[2] == LatticeVector{0, 0, -1});
    // v_i + u_i lies in the span of the later rays (cube combinatorics).
    for (int trial = 0; trial < 50; ++trial) {
        BottMatrix A{oracle::uniform(-9, 9), oracle::uniform(-9, 9), oracle::uniform(-9, 9)};
        Fan g = fan(A);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k <= i; ++k) CHECK(g.v[i][k] + g.u[i][k] == 0);
    }
}

TEST_CASE("c1_orb") {
    auto k = c1_orb(unit_orbifold(3, -5, 7), Basis::X1X2X3);
    CHECK(k.coeffs == std::array<Rational, 3>{2 + 3 - 5, 2 + 7, 2});
    auto y = y13_8_quotient();
    k = c1_orb(y, Basis::X1X2X3);
    CHECK(k.coeffs == std::array<Rational, 3>{q(4040, 13), q(808, 273), q(28, 2805)});
    for (Basis b : all_bases) CHECK(c1_orb(y, b).coeffs[2] == q(28, 2805));
    CHECK_THROWS_AS(make_bott_orbifold({0, 0, 0}, {1, 1, 0, 1, 1, 1}), DomainError);
}

TEST_CASE("basis_change") {
    BottMatrix A{4, 9, -2};
    CohClass in{Basis::X1X2Y3, {2 + 4 - 9, 2 - (-2), 2}};
    CohClass out = basis_change(in, A, Basis::X1X2X3);
    CHECK(out.coeffs == std::array<Rational, 3>{2 + 4 + 9, 2 + (-2), 2});
    CHECK(basis_change(in, A, Basis::X1X2Y3) == in);
}

TEST_CASE("four-basis consistency of c1_orb on random orbifolds") {
    for (int trial = 0; trial < 1000; ++trial) {
        BottOrbifold o = random_orbifold(50, 100, 3);
        auto x = c1_orb(o, Basis::X1X2X3);
        REQUIRE(x.coeffs == c1_from_divisor_sum(o));
        for (Basis b : all_bases) {
            CohClass k = c1_orb(o, b);
            CHECK(basis_change(k, o.matrix, Basis::X1X2X3) == x);
            CHECK(basis_change(x, o.matrix, b) == k);
        }
        std::vector<std::vector<Integer>> lower = {
            {1, 0, 0}, {o.matrix.a, 1, 0}, {o.matrix.b, o.matrix.c, 1}};
        auto general = c1_orb_general(lower, {o.m[0], o.m[2], o.m[4]}, {o.m[1], o.m[3], o.m[5]});
        CHECK(general == std::vector<Rational>(x.coeffs.begin(), x.coeffs.end()));
    }
}

TEST_CASE("c1_orb_general on a 4-stage tower reduces to the divisor sum at m = 1") {
    std::vector<std::vector<Integer>> A = {{1, 0, 0, 0}, {2, 1, 0, 0}, {-3, 5, 1, 0}, {1, 0, 4, 1}};
    std::vector<Rational> ones(4, Rational(1));
    auto c = c1_orb_general(A, ones, ones);
    CHECK(c == std::vector<Rational>{2 + 2 - 3 + 1, 2 + 5 + 0, 2 + 4, 2});
}

TEST_CASE("is_log_fano") {
    CHECK(is_log_fano(unit_orbifold(0, 0, 0)));
    CHECK_FALSE(is_log_fano(unit_orbifold(70, 78540, 748)));
    auto margins = log_fano_margins(unit_orbifold(70, 78540, 748));
    CHECK(margins[0] == 1 + 1 + 70 + 78540);
    CHECK(margins[2] == 1 + 1 + 70 - 78540);

    // Taken literally, the inequalities reject the join quotients: the pulled
    // back twist b dwarfs the branch correction along D_{u3}.
    auto y = y13_8_quotient();
    margins = log_fano_margins(y);
    CHECK(margins[0] == q(4040, 13));
    CHECK(margins[2] == q(-6152, 13));
    CHECK_FALSE(is_log_fano(y));
}

TEST_CASE("monoid_act") {
    auto y = y13_8_quotient();
    Ramification id_scale = {1, 1, 1, 1, 1, 1}, zero = {0, 0, 0, 0, 0, 0};
    CHECK(monoid_act(y, id_scale, zero).m == y.m);
    auto acted = monoid_act(y, {1, 1, 1, 1, 2, 2}, zero);
    CHECK(acted.m == Ramification{1, 1, 91, 65, 510, 330});
    CHECK_FALSE(is_log_fano(acted));
    CHECK_THROWS_AS(monoid_act(y, {1, 1, 1, 1, q(1, 2), 1}, zero), DomainError);
    CHECK_THROWS_AS(monoid_act(y, id_scale, {0, 0, 0, -1, 0, 0}), DomainError);

    // Non-uniform scaling can leave the log Fano set.
    auto h1 = unit_orbifold(1, 0, 0);
    REQUIRE(is_log_fano(h1));
    auto pushed = monoid_act(h1, {10, 10, 1, 1, 1, 1}, zero);
    CHECK(c1_orb(pushed, Basis::X1Y2X3).coeffs[0] == q(1, 10) + q(1, 10) - 1);
    CHECK_FALSE(is_log_fano(pushed));
}

TEST_CASE("uniform scaling preserves log Fano") {
    int checked = 0;
    while (checked < 1000) {
        BottOrbifold o = random_orbifold(5, 20, 4);
        if (!is_log_fano(o)) continue;
        Rational s = make_rational(oracle::uniform(1, 50), oracle::uniform(1, 5)) + 1;
        Ramification lambda;
        lambda.fill(s);
        auto acted = monoid_act(o, lambda, {0, 0, 0, 0, 0, 0});
        CHECK(is_log_fano(acted));
        for (Basis b : all_bases) {
            auto k0 = c1_orb(o, b), k1 = c1_orb(acted, b);
            for (int i = 0; i < 3; ++i) CHECK(k1.coeffs[i] * s == k0.coeffs[i]);
        }
        ++checked;
    }
}

TEST_CASE("ring_multiply") {
    const long a = 3, b = -4, c = 5;
    BottMatrix A{a, b, c};
    auto x1 = RingElement::generator(0), x2 = RingElement::generator(1), x3 = RingElement::generator(2);
    auto mul = [&](const RingElement& u, const RingElement& v) { return ring_multiply(u, v, A); };
    const unsigned X12 = 3, X13 = 5, X23 = 6, X123 = 7;
    CHECK(mul(x1, x1).is_zero());
    auto x2sq = mul(x2, x2);
    CHECK(x2sq.coeff(X12) == -a);
    CHECK(mul(x2sq, x3).coeff(X123) == -a);
    auto x3sq = mul(x3, x3);
    CHECK(x3sq.coeff(X13) == -b);
    CHECK(x3sq.coeff(X23) == -c);
    // Hand-reduced degree-3 products.
    CHECK(mul(x3, mul(x2, x3)).coeff(X123) == a * c - b);
    CHECK(mul(x3, mul(x1, x3)).coeff(X123) == -c);
    CHECK(mul(x2, mul(x1, x2)).is_zero());
    CHECK(mul(x3, x3sq).coeff(X123) == 2 * b * c - a * c * c);
    CHECK(mul(mul(x1, x2), mul(x3, x3)).is_zero());
    CHECK(mul(RingElement::one(), x3) == x3);
}

TEST_CASE("ring is commutative and associative on the monomial basis") {
    for (BottMatrix A : {BottMatrix{0, 0, 0}, BottMatrix{70, 78540, 748}, BottMatrix{-3, 7, 2}, BottMatrix{1, -1, -5}}) {
        std::vector<RingElement> basis;
        for (unsigned mask = 0; mask < 8; ++mask) {
            RingElement e;
            e.add(mask, 1);
            basis.push_back(e);
        }
        for (const auto& u : basis)
            for (const auto& v : basis) {
                CHECK(ring_multiply(u, v, A) == ring_multiply(v, u, A));
                for (const auto& w : basis)
                    CHECK(ring_multiply(ring_multiply(u, v, A), w, A) == ring_multiply(u, ring_multiply(v, w, A), A));
            }
        // Relations hold as elements.
        auto x1 = RingElement::generator(0), x2 = RingElement::generator(1), x3 = RingElement::generator(2);
        auto rel2 = ring_multiply(x2, x1 * Rational(A.a) + x2, A);
        auto rel3 = ring_multiply(x3, x1 * Rational(A.b) + x2 * Rational(A.c) + x3, A);
        CHECK(rel2.is_zero());
        CHECK(rel3.is_zero());
    }
}

TEST_CASE("h3_matrix") {
    auto h = h3_matrix({0, 0, 0}, {1, 1, 1});
    CHECK(h.det == -2);
    CHECK(h.rank == 3);
    h = h3_matrix({2, 0, 0}, {1, 1, 1});
    CHECK(h.det == 0);
    CHECK(h.rank == 2);
    auto y = y13_8_quotient();
    h = h3_matrix(y.matrix, c1_orb(y, Basis::X1X2X3).coeffs);
    CHECK(h.rank == 3);
    CHECK(h.det != 0);
    CHECK_THROWS_AS(h3_matrix({0, 0, 0}, {1, 0, 1}), DomainError);
}

TEST_CASE("exact_rank agrees with minors") {
    for (int trial = 0; trial < 2000; ++trial) {
        Matrix3 m;
        for (auto& row : m)
            for (auto& v : row) v = oracle::uniform(0, 3) == 0 ? Rational(0) : oracle::random_rational(3, 3);
        // Force some dependent rows.
        if (trial % 3 == 0)
            for (int c = 0; c < 3; ++c) m[2][c] = m[0][c] * q(2, 3) - m[1][c];
        CHECK(exact_rank(m) == rank_by_minors(m));
    }
}
