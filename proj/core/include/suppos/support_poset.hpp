// Support posets of squarefree monomial ideals.
//
// For each variable i of a squarefree ideal, C_i is the set of variables
// appearing in every minimal generator divisible by x_i.  The support poset
// orders the distinct C_i by inclusion.  The reverse construction turns a
// valid family of sets plus a collection of index subsets into an ideal with
// the prescribed support poset.

#pragma once

#include <optional>
#include <vector>

#include "suppos/monomial.hpp"
#include "suppos/poset.hpp"

namespace suppos {

/// The sets C_i of an ideal, indexed by the variables in its support.  For a
/// full-support ideal `indices` is 1..n.  Invariants: i is a member of C_i,
/// and k in C_i together with i in C_j forces k in C_j.
struct SupportFamily {
    int n = 0;
    std::vector<int> indices;
    std::vector<IndexSet> sets;  // parallel to indices

    SupportFamily() = default;
    SupportFamily(int ambient, std::vector<IndexSet> full_sets);
    SupportFamily(int ambient, std::vector<int> idx, std::vector<IndexSet> s);

    const IndexSet& at(int i) const;
    bool defined_at(int i) const;
    bool full() const;
    void validate() const;

    friend bool operator==(const SupportFamily&, const SupportFamily&) = default;
};

struct SigmaCollection {
    std::vector<IndexSet> sets;  // each nonempty, within 1..n
};

/// C_i for each i in supp(I); the ideal must be squarefree (polarize first
/// otherwise).
SupportFamily support_family(const MonomialIdeal& ideal);

/// Poset of the distinct C sets ordered by inclusion.  Each node is labelled
/// by the variables whose C equals it (equivalently, the members of the set
/// not occurring in any node below).  Non-squarefree ideals are polarized
/// first, so their poset lives on the polarized variables.
Poset support_poset(const MonomialIdeal& ideal);
Poset support_poset(const SupportFamily& family);

/// Poset on the variables themselves: i precedes j when C_i is strictly
/// contained in C_j, and ties C_i = C_j are broken by var_order (a
/// permutation of 1..n listing the variables smallest first; natural order
/// when empty).
Poset ordered_support_poset(const MonomialIdeal& ideal, const std::vector<int>& var_order = {});

/// I_Sigma: generators lcm(m_i : i in sigma) over sigma in Sigma, where
/// m_i is the product of the variables in C_i.
MonomialIdeal ideal_from_sigma(const SupportFamily& family, const SigmaCollection& sigma);

/// Checks the two conditions under which the family is the support poset of
/// ideal_from_sigma(family, sigma): every variable divides some generator,
/// and containment of the generator sets a variable appears in forces the
/// reverse containment of the C sets.
bool sigma_conditions_hold(const SupportFamily& family, const SigmaCollection& sigma);

bool is_support_poset_of(const SupportFamily& family, const MonomialIdeal& ideal);

/// Exhaustively searches the squarefree ideals on n variables (n <= 4) for
/// one whose support family equals the given one.
std::optional<MonomialIdeal> brute_force_realizability(const SupportFamily& family);

}  // namespace suppos
