#pragma once

// Cohomological invariants of the joins and of Hirzebruch orbifolds.

#include <array>
#include <string>
#include <vector>

#include "sejoin/join.hpp"

namespace sejoin {

// Free rank plus cyclic summands Z_k (k > 1 only).
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Integer> cyclic;

    bool is_trivial() const { return free_rank == 0 && cyclic.empty(); }
    std::string to_string() const;  // "0", "Z^2", "Z + Z_91 + Z_65"
};

// Invariant factors d1 | d2 | ... of Z_{k1} + ... + Z_{kr}, with 1s dropped.
std::vector<Integer> invariant_factors(std::vector<Integer> orders);

bool isomorphic(const AbelianGroup& g, const AbelianGroup& h);

// H^4(M^7, Z) = Z_A + Z_B.
struct TorsionInvariant {
    Integer A, B;
    AbelianGroup group() const;
};

// A = v0 vinf m^2 l2^2, B = w1 w2 l1^2.
TorsionInvariant h4_torsion(const Integer& v0, const Integer& vinf, const Integer& m, const Integer& l2,
                            const Integer& w1, const Integer& w2, const Integer& l1);
TorsionInvariant h4_torsion(const JoinSpec& spec);

// True iff the torsion groups are non-isomorphic. False means only that this
// invariant does not tell the two apart.
bool homotopy_distinct(const TorsionInvariant& t1, const TorsionInvariant& t2);

// b_0 .. b_7 of M^7.
using BettiProfile = std::array<int, 8>;
BettiProfile betti_profile();

// H^r_orb of (H_a, Delta) with branch indices m0, minf along the fibre ends.
AbelianGroup hirzebruch_orb_cohomology(const Integer& m0, const Integer& minf, int r);

inline constexpr const char* pi1_description = "0";
inline constexpr const char* pi2_description = "Z^2";

}  // namespace sejoin
