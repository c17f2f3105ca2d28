#include "suppos/polarity.hpp"

#include <algorithm>

#include "suppos/support_poset.hpp"

namespace suppos {

int PolarizationMap::flat_index(int i, int s) const {
    int f = 0;
    for (int v = 1; v < i; ++v) f += degree_bounds[v - 1];
    if (i < 1 || i > source_vars || s < 1 || s > degree_bounds[i - 1])
        fail("bad-slot", "polarization slot out of range");
    return f + s;
}

Monomial PolarizationMap::polarize_monomial(const Monomial& m) const {
    if (m.vars() != source_vars) fail("ambient-mismatch", "monomial does not match the polarization source");
    std::vector<int> e(target_vars(), 0);
    int base = 0;
    for (int i = 1; i <= source_vars; ++i) {
        int b = m.exponent(i);
        if (b > degree_bounds[i - 1]) fail("bad-slot", "exponent exceeds the polarization degree bound");
        for (int s = 0; s < b; ++s) e[base + s] = 1;
        base += degree_bounds[i - 1];
    }
    return Monomial(std::move(e));
}

Monomial PolarizationMap::flatten_multidegree(const Monomial& target) const {
    if (target.vars() != target_vars()) fail("ambient-mismatch", "multidegree does not match the polarization target");
    std::vector<int> e(source_vars, 0);
    for (int f = 0; f < target_vars(); ++f) e[slots[f].first - 1] += target.exponents()[f];
    return Monomial(std::move(e));
}

Polarization polarize(const MonomialIdeal& ideal) {
    PolarizationMap map;
    map.source_vars = ideal.vars();
    map.degree_bounds.assign(ideal.vars(), 0);
    for (const Monomial& g : ideal.generators())
        for (int i = 1; i <= ideal.vars(); ++i)
            map.degree_bounds[i - 1] = std::max(map.degree_bounds[i - 1], g.exponent(i));
    for (int i = 1; i <= ideal.vars(); ++i)
        for (int s = 1; s <= map.degree_bounds[i - 1]; ++s) map.slots.emplace_back(i, s);

    std::vector<Monomial> gens;
    for (const Monomial& g : ideal.generators()) gens.push_back(map.polarize_monomial(g));
    // polarization preserves minimality, so minimalize only sorts here
    MonomialIdeal polar = MonomialIdeal::minimalize(map.target_vars(), std::move(gens));
    return Polarization{std::move(polar), std::move(map)};
}

MonomialIdeal depolarize_by_chains(const MonomialIdeal& squarefree_ideal, const ChainPartition& blocks) {
    if (!squarefree_ideal.is_squarefree())
        fail("not-squarefree", "chain depolarization starts from a squarefree ideal");
    if (!squarefree_ideal.has_full_support())
        fail("not-full-support", "chain depolarization requires every variable to occur in a generator");
    const int n = squarefree_ideal.vars();
    std::vector<int> block_of(n + 1, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) fail("bad-partition", "empty block");
        for (int v : blocks[b]) {
            if (v < 1 || v > n || block_of[v]) fail("bad-partition", "blocks must partition the variables");
            block_of[v] = static_cast<int>(b) + 1;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (!block_of[v]) fail("bad-partition", "variable " + std::to_string(v) + " is in no block");

    // every block must be a chain of the support poset: C sets pairwise comparable
    SupportFamily family = support_family(squarefree_ideal);
    for (const auto& block : blocks)
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b) {
                if (!family.defined_at(block[a]) || !family.defined_at(block[b]))
                    fail("bad-partition", "blocks may only contain support variables");
                const IndexSet &ca = family.at(block[a]), &cb = family.at(block[b]);
                if (!ca.subset_of(cb) && !cb.subset_of(ca))
                    fail("bad-partition", "block contains incomparable variables " +
                                              std::to_string(block[a]) + " and " + std::to_string(block[b]));
            }

    const int m = static_cast<int>(blocks.size());
    std::vector<Monomial> gens;
    for (const Monomial& g : squarefree_ideal.generators()) {
        std::vector<int> e(m, 0);
        for (int v = 1; v <= n; ++v)
            if (g.exponent(v) > 0) ++e[block_of[v] - 1];
        gens.emplace_back(std::move(e));
    }
    MonomialIdeal candidate = MonomialIdeal::minimalize(m, std::move(gens));

    Polarization back = polarize(candidate);
    if (back.ideal.vars() != squarefree_ideal.vars() ||
        !find_variable_isomorphism(back.ideal, squarefree_ideal))
        fail("not-a-depolarization", "partition does not induce a depolarization");
    return candidate;
}

bool are_copolar(const MonomialIdeal& a, const MonomialIdeal& b) {
    Polarization pa = polarize(a), pb = polarize(b);
    if (pa.ideal.vars() != pb.ideal.vars()) return false;
    return find_variable_isomorphism(pa.ideal, pb.ideal).has_value();
}

}  // namespace suppos
