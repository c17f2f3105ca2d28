// Mayer-Vietoris trees of monomial ideals and multigraded Betti numbers.
//
// A tree node holding <f_1,...,f_r> splits into the right child
// <f_1,...,f_{r-1}> and the left child <f_1,...,f_{r-1}> intersected with
// <f_r>; recursion stops at single generators.  The root sits at position 1
// and dimension 0; the children of (p, d) sit at positions (2p, 2p+1) with
// dimensions (d+1, d).  A node is relevant iff it is the root or its
// position is even.  Counting relevant-node generators by (dimension,
// multidegree) bounds the Betti numbers from both sides.
//
// The independent oracle computes each Betti number as the rank of reduced
// homology of the upper Koszul complex of the multidegree, with exact
// integer arithmetic.  Conventions: Betti numbers resolve the ideal (degree
// zero counts minimal generators) and regularity follows the quotient-ring
// reading max(|mu| - d - 1).

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "suppos/monomial.hpp"

namespace suppos {

using Integer = boost::multiprecision::cpp_int;

/// A deterministic rule ordering the generators of any node ideal; the last
/// generator of the arrangement is the pivot split off next.
struct PivotOrder {
    std::string name;
    std::function<std::vector<Monomial>(const MonomialIdeal&)> arrange;

    /// Stored canonical order (lexicographic), pivot = largest.
    static PivotOrder canonical();
    /// Reversed canonical order, pivot = smallest.
    static PivotOrder reverse_canonical();
    /// Pivots pure powers by variable first, then the mixed generators row by
    /// row; reproduces the tree used to resolve the depolarized line ideals.
    static PivotOrder paper_lines();
    /// Pivots the degree-(3,1) block generators in index order; reproduces
    /// the tree used to resolve the depolarized diamond ideals.
    static PivotOrder paper_diamonds();
    static PivotOrder by_name(const std::string& name);
};

struct MVTNode {
    MonomialIdeal ideal;
    Integer position;
    int dimension = 0;
    std::unique_ptr<MVTNode> left, right;

    bool relevant() const { return position == 1 || (position & 1) == 0; }
};

struct MVTree {
    std::unique_ptr<MVTNode> root;
    std::size_t node_count = 0;
};

MVTree mvt_build(const MonomialIdeal& ideal, const PivotOrder& order = PivotOrder::canonical());

/// Finitely supported table (homological degree, multidegree) -> count.
class BettiTable {
public:
    using Key = std::pair<int, Monomial>;

    void add(int d, const Monomial& mu, long long count = 1);
    long long at(int d, const Monomial& mu) const;
    long long total(int d) const;
    long long graded(int d, int total_degree) const;
    /// Largest d with a nonzero entry; -1 when empty.
    int max_dimension() const;
    bool empty() const { return counts_.empty(); }
    const std::map<Key, long long>& entries() const { return counts_; }

    /// Aligned text: one row per total degree, one column per homological
    /// degree, plus a totals row.
    std::string to_text() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<Key, long long> counts_;
};

struct MVTCounts {
    BettiTable full;  // every relevant-node generator by (dimension, multidegree)
    BettiTable once;  // multidegrees occurring exactly once across all relevant nodes
};
MVTCounts mvt_counts(const MVTree& tree);

struct MVTBounds {
    BettiTable lower, upper;
};

/// lower <= beta <= upper entrywise.  The lower bound starts from the
/// unique-occurrence counts and is raised to the upper bound at every
/// multidegree whose occurrence dimensions are pairwise non-consecutive.
MVTBounds mvt_bounds(const MonomialIdeal& ideal, const PivotOrder& order = PivotOrder::canonical());

/// Exact multigraded Betti numbers via upper Koszul complexes at every
/// distinct subset lcm.  Refuses ideals whose generator subsets exceed the
/// cap (2^20 by default, overridable through SUPPOS_MAX_SUBSETS).
BettiTable betti_oracle(const MonomialIdeal& ideal);

std::size_t oracle_subset_cap();

/// True iff every subset lcm strictly grows when adding a generator, i.e.
/// the Taylor complex has no unit differentials.  Limited to 20 generators.
bool taylor_is_minimal(const MonomialIdeal& ideal);

struct DerivedInvariants {
    int projective_dimension = 0;
    int regularity = 0;
};
DerivedInvariants derived_invariants(const BettiTable& table);

}  // namespace suppos
