#include "sejoin/bott.hpp"

#include <string>

#include "sejoin/errors.hpp"

namespace sejoin {

BottOrbifold make_bott_orbifold(const BottMatrix& matrix, const Ramification& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] <= 0) throw DomainError("ramification entry " + std::to_string(i) + " must be positive, got " + to_string(m[i]));
    return {matrix, m};
}

Fan fan(const BottMatrix& A) {
    Fan f;
    for (int i = 0; i < 3; ++i) {
        f.v[i] = {0, 0, 0};
        f.v[i][i] = 1;
    }
    f.u[0] = {-1, Integer(-A.a), Integer(-A.b)};
    f.u[1] = {0, -1, Integer(-A.c)};
    f.u[2] = {0, 0, -1};
    return f;
}

std::string_view basis_name(Basis b) {
    switch (b) {
        case Basis::X1X2X3: return "x1,x2,x3";
        case Basis::X1X2Y3: return "x1,x2,y3";
        case Basis::X1Y2X3: return "x1,y2,x3";
        case Basis::X1Y2Y3: return "x1,y2,y3";
    }
    return "?";
}

namespace {

bool has_y2(Basis b) { return b == Basis::X1Y2X3 || b == Basis::X1Y2Y3; }
bool has_y3(Basis b) { return b == Basis::X1X2Y3 || b == Basis::X1Y2Y3; }

}  // namespace

CohClass c1_orb(const BottOrbifold& orb, Basis basis) {
    const auto& m = orb.m;
    const Integer &a = orb.matrix.a, &b = orb.matrix.b, &c = orb.matrix.c;
    Rational s1 = 1 / m[0] + 1 / m[1];
    Rational s2 = 1 / m[2] + 1 / m[3];
    Rational s3 = 1 / m[4] + 1 / m[5];
    Rational bac(b - a * c);
    CohClass k{basis, {}};
    switch (basis) {
        case Basis::X1X2X3:
            k.coeffs = {s1 + a / m[2] + b / m[4], s2 + c / m[4], s3};
            break;
        case Basis::X1X2Y3:
            k.coeffs = {s1 + a / m[2] - b / m[5], s2 - c / m[5], s3};
            break;
        case Basis::X1Y2X3:
            k.coeffs = {s1 - a / m[3] + bac / m[4], s2 + c / m[4], s3};
            break;
        case Basis::X1Y2Y3:
            k.coeffs = {s1 - a / m[3] - bac / m[5], s2 - c / m[5], s3};
            break;
    }
    return k;
}

CohClass basis_change(const CohClass& cls, const BottMatrix& A, Basis target) {
    if (cls.basis == target) return cls;
    // Expand into x1, x2, x3.
    auto [x1, x2, x3] = cls.coeffs;
    if (has_y3(cls.basis)) {
        x1 += cls.coeffs[2] * A.b;
        x2 += cls.coeffs[2] * A.c;
    }
    if (has_y2(cls.basis)) x1 += cls.coeffs[1] * A.a;
    // Collect into the target basis, peeling y3 before y2.
    if (has_y3(target)) {
        x1 -= x3 * A.b;
        x2 -= x3 * A.c;
    }
    if (has_y2(target)) x1 -= x2 * A.a;
    return {target, {x1, x2, x3}};
}

std::vector<Rational> c1_orb_general(const std::vector<std::vector<Integer>>& lower, const std::vector<Rational>& m0,
                                     const std::vector<Rational>& minf) {
    std::size_t n = m0.size();
    if (minf.size() != n || lower.size() != n) throw DomainError("c1_orb_general: size mismatch");
    std::vector<Rational> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = 1 / m0[j] + 1 / minf[j];
        for (std::size_t i = j + 1; i < n; ++i) out[j] += lower[i][j] / m0[i];
    }
    return out;
}

std::array<Rational, 8> log_fano_margins(const BottOrbifold& orb) {
    std::array<Rational, 8> out;
    for (std::size_t i = 0; i < all_bases.size(); ++i) {
        CohClass k = c1_orb(orb, all_bases[i]);
        out[2 * i] = k.coeffs[0];
        out[2 * i + 1] = k.coeffs[1];
    }
    return out;
}

bool is_log_fano(const BottOrbifold& orb) {
    for (const auto& v : log_fano_margins(orb))
        if (v <= 0) return false;
    return true;
}

RingElement RingElement::one() {
    RingElement e;
    e.c_[0] = 1;
    return e;
}

RingElement RingElement::generator(int i) {
    if (i < 0 || i > 2) throw DomainError("ring generator index must be 0, 1 or 2");
    RingElement e;
    e.c_[1u << i] = 1;
    return e;
}

bool RingElement::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

RingElement& RingElement::operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    return *this;
}

namespace {

RingElement monomial(unsigned mask, const Rational& coeff) {
    RingElement e;
    e.add(mask, coeff);
    return e;
}

RingElement times_generator(const RingElement& e, int i, const BottMatrix& A) {
    const unsigned bit = 1u << i;
    RingElement out;
    for (unsigned mask = 0; mask < 8; ++mask) {
        const Rational& k = e.coeff(mask);
        if (k == 0) continue;
        if ((mask & bit) == 0) {
            out.add(mask | bit, k);
            continue;
        }
        // mask contains x_i: replace x_i^2 by its relation and multiply back in.
        RingElement rest = monomial(mask & ~bit, k);
        switch (i) {
            case 0:
                break;  // x1^2 = 0
            case 1:
                out += times_generator(times_generator(rest, 0, A), 1, A) * Rational(-A.a);
                break;
            case 2:
                out += times_generator(times_generator(rest, 0, A), 2, A) * Rational(-A.b);
                out += times_generator(times_generator(rest, 1, A), 2, A) * Rational(-A.c);
                break;
        }
    }
    return out;
}

}  // namespace

RingElement ring_multiply(const RingElement& lhs, const RingElement& rhs, const BottMatrix& A) {
    RingElement out;
    for (unsigned mask = 0; mask < 8; ++mask) {
        const Rational& k = rhs.coeff(mask);
        if (k == 0) continue;
        RingElement term = lhs * k;
        for (int i = 0; i < 3; ++i)
            if (mask & (1u << i)) term = times_generator(term, i, A);
        out += term;
    }
    return out;
}

int exact_rank(const Matrix3& m) {
    // Clear denominators row by row, then fraction-free (Bareiss) elimination.
    std::array<std::array<Integer, 3>, 3> z;
    for (int r = 0; r < 3; ++r) {
        Integer den = 1;
        for (const auto& v : m[r]) den = lcm(den, v.get_den());
        for (int c = 0; c < 3; ++c) z[r][c] = Rational(m[r][c] * den).get_num();
    }
    int rank = 0;
    Integer prev = 1;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int pivot = -1;
        for (int r = rank; r < 3; ++r)
            if (z[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(z[rank], z[pivot]);
        for (int r = rank + 1; r < 3; ++r) {
            for (int c = col + 1; c < 3; ++c) z[r][c] = (z[rank][col] * z[r][c] - z[r][col] * z[rank][c]) / prev;
            z[r][col] = 0;
        }
        prev = z[rank][col];
        ++rank;
    }
    return rank;
}

Rational determinant(const Matrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

H3Matrix h3_matrix(const BottMatrix& A, const std::array<Rational, 3>& k) {
    for (const auto& v : k)
        if (v <= 0) throw DomainError("h3_matrix needs a class with positive coefficients");
    H3Matrix h;
    h.matrix = {{{k[1], k[0] - k[1] * A.a, 0}, {k[2], 0, k[0] - k[2] * A.b}, {0, k[2], k[1] - k[2] * A.c}}};
    h.rank = exact_rank(h.matrix);
    h.det = determinant(h.matrix);
    return h;
}

BottOrbifold monoid_act(const BottOrbifold& orb, const Ramification& lambda, const Ramification& shift) {
    Ramification m;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (lambda[i] < 1) throw DomainError("monoid scale must be >= 1");
        if (shift[i] < 0) throw DomainError("monoid shift must be >= 0");
        m[i] = lambda[i] * orb.m[i] + shift[i];
    }
    return make_bott_orbifold(orb.matrix, m);
}

}  // namespace sejoin
