#include "suppos/support_poset.hpp"

#include <algorithm>
#include <map>

#include "suppos/polarity.hpp"

namespace suppos {

SupportFamily::SupportFamily(int ambient, std::vector<IndexSet> full_sets)
    : n(ambient), sets(std::move(full_sets)) {
    for (int i = 1; i <= n; ++i) indices.push_back(i);
    if (indices.size() != sets.size()) fail("invalid-family", "expected one set per variable");
    validate();
}

SupportFamily::SupportFamily(int ambient, std::vector<int> idx, std::vector<IndexSet> s)
    : n(ambient), indices(std::move(idx)), sets(std::move(s)) {
    if (indices.size() != sets.size()) fail("invalid-family", "index/set length mismatch");
    validate();
}

const IndexSet& SupportFamily::at(int i) const {
    auto it = std::lower_bound(indices.begin(), indices.end(), i);
    if (it == indices.end() || *it != i) fail("invalid-family", "no set for variable " + std::to_string(i));
    return sets[it - indices.begin()];
}

bool SupportFamily::defined_at(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

bool SupportFamily::full() const { return static_cast<int>(indices.size()) == n; }

void SupportFamily::validate() const {
    if (!std::is_sorted(indices.begin(), indices.end()) ||
        std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        fail("invalid-family", "family indices must be strictly increasing");
    for (std::size_t k = 0; k < indices.size(); ++k) {
        int i = indices[k];
        if (i < 1 || i > n) fail("invalid-family", "family index out of 1..n");
        if (!sets[k].contains(i))
            fail("invalid-family", "C_" + std::to_string(i) + " does not contain " + std::to_string(i));
        for (int j : sets[k])
            if (!defined_at(j)) fail("invalid-family", "C_" + std::to_string(i) + " leaves the index range");
    }
    // k in C_i and i in C_j force k in C_j
    for (int i : indices)
        for (int j : indices)
            if (at(j).contains(i) && !at(i).subset_of(at(j)))
                fail("invalid-family", "transitivity fails at C_" + std::to_string(i) + " inside C_" +
                                           std::to_string(j));
}

SupportFamily support_family(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        fail("not-squarefree", "support families are defined for squarefree ideals; polarize first");
    IndexSet supp = ideal.support();
    std::vector<int> indices(supp.values());
    std::vector<IndexSet> sets;
    for (int i : indices) {
        IndexSet c = supp;
        for (const Monomial& g : ideal.generators())
            if (g.exponent(i) > 0) c = c.intersect(g.support());
        sets.push_back(c);
    }
    return SupportFamily(ideal.vars(), std::move(indices), std::move(sets));
}

Poset support_poset(const SupportFamily& family) {
    // distinct sets, each labelled by its class of variables
    std::map<IndexSet, IndexSet> classes;  // set -> variables whose C equals it
    for (std::size_t k = 0; k < family.indices.size(); ++k)
        classes[family.sets[k]].insert(family.indices[k]);

    std::map<IndexSet, std::string> label;
    std::vector<std::string> labels;
    for (const auto& [set, cls] : classes) {
        label[set] = cls.to_string();
        labels.push_back(cls.to_string());
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [sa, la] : label)
        for (const auto& [sb, lb] : label)
            if (!(sa == sb) && sa.subset_of(sb)) pairs.emplace_back(la, lb);
    return Poset::from_relation(std::move(labels), std::move(pairs));
}

Poset support_poset(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) return support_poset(polarize(ideal).ideal);
    return support_poset(support_family(ideal));
}

Poset ordered_support_poset(const MonomialIdeal& ideal, const std::vector<int>& var_order) {
    const MonomialIdeal squarefree = ideal.is_squarefree() ? ideal : polarize(ideal).ideal;
    SupportFamily family = support_family(squarefree);

    std::vector<int> rank(squarefree.vars() + 1, 0);
    if (var_order.empty()) {
        for (int i = 1; i <= squarefree.vars(); ++i) rank[i] = i;
    } else {
        if (static_cast<int>(var_order.size()) != squarefree.vars())
            fail("bad-order", "variable order must list all variables");
        std::vector<bool> seen(squarefree.vars() + 1, false);
        for (std::size_t r = 0; r < var_order.size(); ++r) {
            int v = var_order[r];
            if (v < 1 || v > squarefree.vars() || seen[v]) fail("bad-order", "not a permutation of the variables");
            seen[v] = true;
            rank[v] = static_cast<int>(r) + 1;
        }
    }

    std::vector<std::string> labels;
    for (int i : family.indices) labels.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i : family.indices)
        for (int j : family.indices) {
            if (i == j) continue;
            const IndexSet &ci = family.at(i), &cj = family.at(j);
            bool before = (ci == cj) ? rank[i] < rank[j] : ci.subset_of(cj);
            if (before) pairs.emplace_back(std::to_string(i), std::to_string(j));
        }
    return Poset::from_relation(std::move(labels), std::move(pairs));
}

MonomialIdeal ideal_from_sigma(const SupportFamily& family, const SigmaCollection& sigma) {
    family.validate();
    std::vector<Monomial> gens;
    for (const IndexSet& s : sigma.sets) {
        if (s.empty()) fail("invalid-sigma", "empty subset in the collection");
        IndexSet supp;
        for (int i : s) supp = supp.unite(family.at(i));
        gens.push_back(Monomial::from_support(family.n, supp));
    }
    return MonomialIdeal::minimalize(family.n, std::move(gens));
}

bool sigma_conditions_hold(const SupportFamily& family, const SigmaCollection& sigma) {
    // generator supports, one per sigma
    std::vector<IndexSet> supports;
    for (const IndexSet& s : sigma.sets) {
        IndexSet supp;
        for (int i : s) {
            if (!family.defined_at(i)) return false;
            supp = supp.unite(family.at(i));
        }
        supports.push_back(supp);
    }
    // (1) every variable divides some generator
    for (int i : family.indices) {
        bool hit = false;
        for (const IndexSet& supp : supports)
            if (supp.contains(i)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    // (2) containment of occurrence sets forces reverse containment of C sets
    for (int i : family.indices)
        for (int j : family.indices) {
            bool contained = true;
            for (const IndexSet& supp : supports)
                if (supp.contains(i) && !supp.contains(j)) {
                    contained = false;
                    break;
                }
            if (contained && !family.at(j).subset_of(family.at(i))) return false;
        }
    return true;
}

bool is_support_poset_of(const SupportFamily& family, const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) return false;
    if (ideal.vars() != family.n) return false;
    return support_family(ideal) == family;
}

std::optional<MonomialIdeal> brute_force_realizability(const SupportFamily& family) {
    const int n = family.n;
    if (n > 4) fail("too-large", "exhaustive realizability search is limited to 4 variables");
    // all nonunit squarefree monomials <-> nonempty subsets of 1..n
    std::vector<Monomial> mons;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> e(n, 0);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) e[i] = 1;
        mons.emplace_back(std::move(e));
    }
    const unsigned count = 1u << mons.size();
    for (unsigned pick = 1; pick < count; ++pick) {
        std::vector<Monomial> gens;
        for (std::size_t k = 0; k < mons.size(); ++k)
            if (pick & (1u << k)) gens.push_back(mons[k]);
        bool antichain = true;
        for (std::size_t a = 0; a < gens.size() && antichain; ++a)
            for (std::size_t b = 0; b < gens.size() && antichain; ++b)
                if (a != b && divides(gens[a], gens[b])) antichain = false;
        if (!antichain) continue;
        MonomialIdeal candidate = MonomialIdeal::minimalize(n, gens);
        if (support_family(candidate) == family) return candidate;
    }
    return std::nullopt;
}

}  // namespace suppos
