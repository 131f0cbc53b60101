#pragma once

// Quasi-regular Sasaki-Einstein structures on Y^{p,q} and their quotient
// Hirzebruch orbifolds (H_a, Delta_{m2}).

#include <utility>

#include "sejoin/kernel/polynomial.hpp"

namespace sejoin {

struct HirzebruchQuotient {
    Integer m2;
    Integer m2_0;
    Integer m2_inf;
    Integer a;  // Hirzebruch degree
};

struct YpqEinstein {
    Integer p, q;
    Integer l;  // gcd(p+q, p-q), 1 or 2
    Integer v2_0, v2_inf;
    Integer m2, m2_0, m2_inf;
    Integer a;
    Integer fano_index;

    friend bool operator==(const YpqEinstein&, const YpqEinstein&) = default;
};

// Throws DomainError unless p > q >= 1 and gcd(p, q) = 1.
void validate_ypq(const Integer& p, const Integer& q);

// 4p^2 - 3q^2 is a perfect square.
bool is_quasi_regular(const Integer& p, const Integer& q);

// Integrand whose integral over [-1, 1] vanishes on the Einstein ray:
// ((v0 - vinf) - (v0 + vinf) z) (((p+q) vinf + (p-q) v0) + ((p+q) vinf - (p-q) v0) z).
Polynomial einstein_integrand(const Integer& p, const Integer& q, const Integer& v2_0, const Integer& v2_inf);

// Coprime positive (v2_0, v2_inf) of the Einstein ray. Requires a quasi-regular pair.
std::pair<Integer, Integer> einstein_ray(const Integer& p, const Integer& q);

HirzebruchQuotient hirzebruch_quotient(const Integer& p, const Integer& q, const Integer& v2_0, const Integer& v2_inf);

// gcd((2 m2 v2_0 + a) v2_inf, v2_0 + v2_inf)
Integer fano_index(const Integer& m2, const Integer& v2_0, const Integer& v2_inf, const Integer& a);

// Full pipeline: quasi-regularity, Einstein ray, quotient, Fano index.
YpqEinstein solve_ypq(const Integer& p, const Integer& q);

// p = 12k^2 + 18k + 7, q = 12k^2 + 16k + 5, checked against the closed forms
// for m2, (m2_0, m2_inf), a and the index 5 + 6k.
YpqEinstein family_member(const Integer& k2);

// The homogeneous structure on S^2 x S^3 ((p,q) = (1,0)), outside the
// p > q >= 1 range: ray, l and ramification all 1, quotient CP^1 x CP^1
// (a = 0, index 2).
YpqEinstein homogeneous_s2xs3();

}  // namespace sejoin
