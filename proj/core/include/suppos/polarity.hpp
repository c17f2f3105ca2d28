// Polarization of monomial ideals, chain-partition depolarization, and the
// copolarity test (two ideals sharing a polarization class up to renaming).

#pragma once

#include <utility>
#include <vector>

#include "suppos/monomial.hpp"

namespace suppos {

/// Source variable i expands into slots (i,1)..(i,a_i) where a_i is the
/// largest exponent of x_i among the generators.  Slots are flattened into
/// target variables in increasing i, slot-major.
struct PolarizationMap {
    int source_vars = 0;
    std::vector<int> degree_bounds;            // a_i per source variable
    std::vector<std::pair<int, int>> slots;    // target variable f -> (i, s), 0-based f

    int target_vars() const { return static_cast<int>(slots.size()); }
    /// 1-based target index of slot (i, s).
    int flat_index(int i, int s) const;
    Monomial polarize_monomial(const Monomial& m) const;
    /// Collapses a target multidegree back to the source variables by
    /// summing slot exponents per source variable.
    Monomial flatten_multidegree(const Monomial& target) const;
};

struct Polarization {
    MonomialIdeal ideal;  // squarefree, full support
    PolarizationMap map;
};

Polarization polarize(const MonomialIdeal& ideal);

/// Blocks of variables, each totally ordered (under inclusion of the C sets)
/// in the support poset of the ideal being depolarized.
using ChainPartition = std::vector<std::vector<int>>;

/// One target variable per block; a generator maps to the product of block
/// variables raised to the size of its support inside each block.  The result
/// is verified by re-polarizing and matching the input up to renaming.
MonomialIdeal depolarize_by_chains(const MonomialIdeal& squarefree_ideal, const ChainPartition& blocks);

/// True iff the polarizations of the two ideals coincide up to a variable
/// bijection.  Polarized ideals always have full support, so differing
/// polarized ambient counts decide immediately.
bool are_copolar(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace suppos
