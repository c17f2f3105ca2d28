// Seeded samplers shared by the property tests and the acceptance suite.
// Every sampler takes the engine by reference so failures replay from the
// seed printed by the failing test.

#pragma once

#include <random>
#include <vector>

#include "suppos/constructions.hpp"
#include "suppos/monomial.hpp"
#include "suppos/poset.hpp"
#include "suppos/support_poset.hpp"

namespace suppos::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random nonzero monomial ideal: up to `max_gens` random monomials on
/// `vars` variables with exponents <= max_exp, minimalized.
inline MonomialIdeal random_ideal(Rng& rng, int vars, int max_gens, int max_exp) {
    for (;;) {
        int count = uniform(rng, 1, max_gens);
        std::vector<Monomial> gens;
        for (int g = 0; g < count; ++g) {
            std::vector<int> e(vars, 0);
            for (int i = 0; i < vars; ++i) e[i] = uniform(rng, 0, max_exp);
            Monomial m{std::move(e)};
            if (!m.is_unit()) gens.push_back(std::move(m));
        }
        if (!gens.empty()) return MonomialIdeal::minimalize(vars, std::move(gens));
    }
}

/// Random forest on labels 1..node_count: each node after the first either
/// starts a new tree or attaches above a random earlier node.
inline Poset random_forest(Rng& rng, int node_count, int new_root_percent = 25) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 1; i <= node_count; ++i) {
        labels.push_back(std::to_string(i));
        if (i == 1) continue;
        if (uniform(rng, 1, 100) <= new_root_percent) continue;
        int parent = uniform(rng, 1, i - 1);
        covers.emplace_back(std::to_string(parent), std::to_string(i));
    }
    return Poset::from_covers(std::move(labels), std::move(covers));
}

namespace detail {

inline std::vector<double> catalan_table(int up_to) {
    std::vector<double> c{1.0};
    for (int t = 1; t <= up_to; ++t) c.push_back(c.back() * 2 * (2 * t - 1) / (t + 1));
    return c;
}

/// Uniform binary tree shape over `leaves` in-order leaves starting at
/// `first`; a fair coin picks sum or intersection at each inner node.
inline SPExpr random_sp_subtree(Rng& rng, int first, int leaves) {
    if (leaves == 1) return SPExpr::var(first);
    static const std::vector<double> catalan = catalan_table(64);
    std::vector<double> weight(leaves - 1);
    for (int l = 1; l < leaves; ++l) weight[l - 1] = catalan[l - 1] * catalan[leaves - l - 1];
    std::discrete_distribution<int> pick(weight.begin(), weight.end());
    int left = pick(rng) + 1;
    SPExpr l = random_sp_subtree(rng, first, left);
    SPExpr r = random_sp_subtree(rng, first + left, leaves - left);
    return uniform(rng, 0, 1) ? SPExpr::sum(std::move(l), std::move(r))
                              : SPExpr::intersection(std::move(l), std::move(r));
}

}  // namespace detail

inline SPExpr random_sp_expr(Rng& rng, int max_vars) {
    return detail::random_sp_subtree(rng, 1, uniform(rng, 1, max_vars));
}

/// Random valid support family on `vars` variables: variables map onto the
/// nodes of a random forest (every node hit) and each C set is the induced
/// down-set, which is transitive by construction.
inline SupportFamily random_support_family(Rng& rng, int vars) {
    int nodes = uniform(rng, 1, vars);
    Poset forest = random_forest(rng, nodes);
    std::vector<int> node_of(vars);
    for (int i = 0; i < nodes; ++i) node_of[i] = i + 1;       // nodes stay inhabited
    for (int i = nodes; i < vars; ++i) node_of[i] = uniform(rng, 1, nodes);
    std::shuffle(node_of.begin(), node_of.end(), rng);

    std::vector<IndexSet> sets;
    for (int v = 1; v <= vars; ++v) {
        IndexSet c;
        std::string mine = std::to_string(node_of[v - 1]);
        for (int w = 1; w <= vars; ++w) {
            std::string theirs = std::to_string(node_of[w - 1]);
            if (theirs == mine || forest.less(theirs, mine)) c.insert(w);
        }
        sets.push_back(c);
    }
    return SupportFamily(vars, std::move(sets));
}

}  // namespace suppos::testing
