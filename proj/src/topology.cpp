#include "sejoin/topology.hpp"

#include <algorithm>

#include "sejoin/errors.hpp"

namespace sejoin {

std::string AbelianGroup::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& k : cyclic) parts.push_back("Z_" + k.get_str());
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

std::vector<Integer> invariant_factors(std::vector<Integer> orders) {
    for (const auto& k : orders)
        if (k <= 0) throw DomainError("invariant_factors: orders must be positive");
    // Replacing (x, y) by (gcd, lcm) keeps the group; sweeping every pair
    // leaves a divisor chain.
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            Integer g = gcd(orders[i], orders[j]);
            orders[j] = orders[i] / g * orders[j];
            orders[i] = g;
        }
    std::erase_if(orders, [](const Integer& k) { return k == 1; });
    return orders;
}

bool isomorphic(const AbelianGroup& g, const AbelianGroup& h) {
    return g.free_rank == h.free_rank && invariant_factors(g.cyclic) == invariant_factors(h.cyclic);
}

AbelianGroup TorsionInvariant::group() const {
    AbelianGroup g;
    for (const auto& k : {A, B})
        if (k != 1) g.cyclic.push_back(k);
    return g;
}

TorsionInvariant h4_torsion(const Integer& v0, const Integer& vinf, const Integer& m, const Integer& l2,
                            const Integer& w1, const Integer& w2, const Integer& l1) {
    for (const auto* x : {&v0, &vinf, &m, &l2, &w1, &w2, &l1})
        if (*x <= 0) throw DomainError("h4_torsion: parameters must be positive");
    return {v0 * vinf * m * m * l2 * l2, w1 * w2 * l1 * l1};
}

TorsionInvariant h4_torsion(const JoinSpec& spec) {
    const auto& y = spec.ypq;
    return h4_torsion(y.v2_0, y.v2_inf, y.m2, spec.l2, spec.w1, spec.w2, spec.l1);
}

bool homotopy_distinct(const TorsionInvariant& t1, const TorsionInvariant& t2) {
    return !isomorphic(t1.group(), t2.group());
}

BettiProfile betti_profile() { return {1, 0, 2, 0, 0, 2, 0, 1}; }

AbelianGroup hirzebruch_orb_cohomology(const Integer& m0, const Integer& minf, int r) {
    if (m0 < 1 || minf < 1 || r < 0) throw DomainError("hirzebruch_orb_cohomology: need m0, minf >= 1 and r >= 0");
    AbelianGroup g;
    if (r % 2 == 1) return g;
    if (r == 0) g.free_rank = 1;
    if (r == 2) g.free_rank = 2;
    if (r == 4) g.free_rank = 1;
    if (r >= 4)
        for (const auto& k : {m0, minf})
            if (k != 1) g.cyclic.push_back(k);
    return g;
}

}  // namespace sejoin
