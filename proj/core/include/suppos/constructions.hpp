// Explicit families of monomial ideals with known support posets: disjoint
// lines, disjoint diamonds, leaf ideals of forests, (consecutive) k-out-of-n
// window ideals, and series-parallel ideals, together with their closed-form
// Betti data.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "suppos/monomial.hpp"
#include "suppos/poset.hpp"
#include "suppos/resolution.hpp"
#include "suppos/support_poset.hpp"

namespace suppos {

// -------------------------------------------------------------- lines

/// Squarefree ideal on n*m variables whose support poset is n disjoint
/// chains of length m; n >= 2.
MonomialIdeal lines_ideal(int n, int m);

/// Zero-dimensional depolarization on n variables: the pure powers y_i^m
/// plus the mixed generators y_1^{m-k} y_j^k; n >= 2.
MonomialIdeal lines_depolarized(int n, int m);

/// Total Betti number of lines_depolarized(n, m) in homological degree i;
/// zero outside 0..n-1.
Integer lines_betti(int n, int m, int i);
int lines_projective_dimension(int n, int m);
int lines_regularity(int n, int m);

// ------------------------------------------------------------ diamonds

/// Squarefree ideal on 4m variables whose support poset is m disjoint
/// diamonds; m >= 2.  Block i uses variables 4(i-1)+1 .. 4(i-1)+4.
MonomialIdeal diamonds_ideal(int m);

/// Copolar ideal on 2m variables with generators of degree four; block i
/// uses variables 2i-1, 2i.  m >= 2.
MonomialIdeal diamonds_depolarized(int m);

/// The recurrence K(m,a,b) = K(m,a-2,b-1) + K(m,a-1,b) with base cases
/// K(m,a,0) = m+a, K(m,0,b) = C(m,b+1), K(m,1,b) = C(m,b) + C(m,b+1);
/// counts the contribution of one partially processed node to the diamond
/// resolution.  Negative indices are refused.
Integer diamond_count(int m, int a, int b);
/// Closed form sum_t C(a+1-t, t) * C(m, b+1-t); agrees with diamond_count.
Integer diamond_count_closed(int m, int a, int b);

/// Total Betti number of diamonds_depolarized(m): 2m at i = 0, otherwise
/// 2 K(m,m-3,i-1) + K(m,m-2,i).  Requires m >= 3 for i >= 1 (at m = 2 the
/// formula would index K at a negative position).
Integer diamonds_betti(int m, int i);
int diamonds_projective_dimension(int m);
int diamonds_regularity(int m);

Integer binomial(long long n, long long k);

// ---------------------------------------------------------- leaf ideals

/// One squarefree generator per leaf of the forest: the product of the
/// variables on the root-to-leaf path (ancestors and the leaf itself).
/// Labels must be the integers 1..n.
MonomialIdeal leaf_ideal(const Poset& forest);

struct ForestReduction {
    Poset forest;                                     // every node a leaf or >= 2 children
    std::map<std::string, std::string> merged_into;   // original label -> representative
};

/// Repeatedly merges each only-child with its parent; the merged node keeps
/// the child's (upper) label.  Leaf count is preserved.
ForestReduction reduce_forest(const Poset& forest);

/// Node sets along the full reduction: the input, the reduced forest, then
/// after each round of deleting the roots of multi-node trees (re-reducing
/// in between) until only isolated points remain.
std::vector<std::vector<std::string>> reduction_stages(const Poset& forest);

// ------------------------------------------------------------- windows

/// Consecutive k-out-of-n ideal: the n-k+1 windows of k consecutive
/// variables.
MonomialIdeal consecutive_kn(int k, int n);

/// Closed form of support_family(consecutive_kn(k, n)): chains at both ends
/// with singletons in the middle when k < n-k+1, or a merged middle chain
/// when k >= n-k+1.
SupportFamily kn_support_family(int k, int n);

/// All products of k distinct variables.
MonomialIdeal k_out_of_n(int k, int n);

/// Small copolar companion of consecutive_kn(k, n): the window
/// depolarization onto the canonical chain partition, in 2 variables when
/// 2k >= n+1 and 2+n-2k variables otherwise.  k >= 2.
MonomialIdeal copolar_kn(int k, int n);

// ------------------------------------------------------- series-parallel

/// Expression tree for series-parallel ideals: leaves are single variables,
/// inner nodes are sums (parallel) or intersections (series).  Every
/// variable 1..n appears in exactly one leaf.
struct SPExpr {
    enum class Kind { Variable, Sum, Intersection };
    Kind kind = Kind::Variable;
    int variable = 0;
    std::unique_ptr<SPExpr> left, right;

    static SPExpr var(int i);
    static SPExpr sum(SPExpr l, SPExpr r);
    static SPExpr intersection(SPExpr l, SPExpr r);
    SPExpr clone() const;

    /// Parenthesized grammar where '*' is intersection and '+' is sum with
    /// the usual precedence, e.g. "( (1 * (2*3 + 4)) * (5 * (6*7 + 8)) )".
    static SPExpr parse(const std::string& text);
    std::string to_string() const;
};

MonomialIdeal sp_ideal(const SPExpr& expr);

/// The recursive witness that every forest is the support poset of a
/// series-parallel ideal: leaves become variables, an inner node intersects
/// its variable with the sum over its children, trees are summed.  Labels
/// must be the integers 1..n; evaluating the result yields leaf_ideal(forest).
SPExpr sp_from_forest(const Poset& forest);

}  // namespace suppos
