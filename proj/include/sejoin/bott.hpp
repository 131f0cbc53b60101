#pragma once

// Stage-3 Bott orbifolds (M_3(a,b,c), Delta_m): fan, divisor bases,
// orbifold first Chern class, log Fano test and the cohomology ring
//   Z[x1,x2,x3] / (x1^2, x2(a x1 + x2), x3(b x1 + c x2 + x3)).

#include <array>
#include <string_view>
#include <vector>

#include "sejoin/kernel/arith.hpp"

namespace sejoin {

// Lower triangular unipotent matrix [[1,0,0],[a,1,0],[b,c,1]].
struct BottMatrix {
    Integer a, b, c;
    friend bool operator==(const BottMatrix&, const BottMatrix&) = default;
};

// (m1_0, m1_inf, m2_0, m2_inf, m3_0, m3_inf). Rational entries allow the
// cone-angle reading of non-integral ramification.
using Ramification = std::array<Rational, 6>;

struct BottOrbifold {
    BottMatrix matrix;
    Ramification m;
};

// Throws DomainError unless every ramification entry is positive.
BottOrbifold make_bott_orbifold(const BottMatrix& matrix, const Ramification& m);

using LatticeVector = std::array<Integer, 3>;

// Primitive collections {v_i, u_i}: v_i the standard basis,
// u1 = -v1 - a v2 - b v3, u2 = -v2 - c v3, u3 = -v3.
struct Fan {
    std::array<LatticeVector, 3> v;
    std::array<LatticeVector, 3> u;
};

Fan fan(const BottMatrix& matrix);

// The four distinguished dual bases; x_i is dual to D_{u_i}, y_i to D_{v_i}.
enum class Basis { X1X2X3, X1X2Y3, X1Y2X3, X1Y2Y3 };
inline constexpr std::array<Basis, 4> all_bases = {Basis::X1X2X3, Basis::X1X2Y3, Basis::X1Y2X3, Basis::X1Y2Y3};
std::string_view basis_name(Basis b);

// Degree-2 class with coefficients on the three generators of `basis`.
struct CohClass {
    Basis basis = Basis::X1X2X3;
    std::array<Rational, 3> coeffs;
    friend bool operator==(const CohClass&, const CohClass&) = default;
};

CohClass c1_orb(const BottOrbifold& orb, Basis basis);

// Rewrites a class using y1 = x1, y2 = a x1 + x2, y3 = b x1 + c x2 + x3.
CohClass basis_change(const CohClass& cls, const BottMatrix& matrix, Basis target);

// c1^orb in the x-basis for an n-stage tower. `lower` is the unipotent
// matrix A (row i, column j holds A^j_i for j < i); m0/minf have length n.
std::vector<Rational> c1_orb_general(const std::vector<std::vector<Integer>>& lower, const std::vector<Rational>& m0,
                                     const std::vector<Rational>& minf);

// The eight strict inequalities: the first two coefficients of c1^orb in
// each of the four bases, in basis order.
std::array<Rational, 8> log_fano_margins(const BottOrbifold& orb);
bool is_log_fano(const BottOrbifold& orb);

// Element of the truncated cohomology ring over Q. Coefficient index is a
// bitmask of generators: bit 0 = x1, bit 1 = x2, bit 2 = x3.
class RingElement {
public:
    RingElement() = default;
    static RingElement one();
    static RingElement generator(int i);  // x_{i+1}, i in {0,1,2}

    const Rational& coeff(unsigned mask) const { return c_[mask]; }
    void add(unsigned mask, const Rational& v) { c_[mask] += v; }
    bool is_zero() const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator*=(const Rational& s);
    friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
    friend RingElement operator*(RingElement x, const Rational& s) { return x *= s; }
    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    std::array<Rational, 8> c_{};
};

// Product reduced by x1^2 = 0, x2^2 = -a x1 x2, x3^2 = -b x1 x3 - c x2 x3.
// Anything past degree 3 vanishes.
RingElement ring_multiply(const RingElement& lhs, const RingElement& rhs, const BottMatrix& matrix);

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

int exact_rank(const Matrix3& m);
Rational determinant(const Matrix3& m);

struct H3Matrix {
    Matrix3 matrix;
    int rank = 0;
    Rational det;
};

// Kernel condition for a Kahler class (c1,c2,c3):
// [[c2, c1 - c2 a, 0], [c3, 0, c1 - c3 b], [0, c3, c2 - c3 c]].
// Throws DomainError unless every c_i > 0.
H3Matrix h3_matrix(const BottMatrix& matrix, const std::array<Rational, 3>& kahler);

// m_j -> lambda_j m_j + shift_j slotwise; lambda_j >= 1 and shift_j >= 0.
BottOrbifold monoid_act(const BottOrbifold& orb, const Ramification& lambda, const Ramification& shift);

}  // namespace sejoin
