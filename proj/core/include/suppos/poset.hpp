// Finite posets with string labels, plus the forest/tree vocabulary used by
// the rest of the library (roots are minimal, leaves are maximal).

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace suppos {

class Poset {
public:
    Poset() = default;

    /// Builds from the strict comparable pairs; verifies irreflexivity,
    /// antisymmetry and transitivity.
    static Poset from_relation(std::vector<std::string> elements,
                               std::vector<std::pair<std::string, std::string>> strict_pairs);

    /// Builds from Hasse edges (a below b); takes the transitive closure and
    /// rejects cycles.
    static Poset from_covers(std::vector<std::string> elements,
                             std::vector<std::pair<std::string, std::string>> cover_pairs);

    static Poset antichain(std::vector<std::string> elements);
    static Poset chain(std::vector<std::string> elements_bottom_up);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::vector<std::string>& elements() const { return elements_; }
    bool has(const std::string& label) const;

    bool less(const std::string& a, const std::string& b) const;  // strict
    bool leq(const std::string& a, const std::string& b) const;
    bool comparable(const std::string& a, const std::string& b) const;

    /// Hasse edges (a,b) with a < b and nothing strictly between.
    std::vector<std::pair<std::string, std::string>> covers() const;

    /// True iff every element covers at most one element (and hence the Hasse
    /// diagram is a disjoint union of rooted trees growing upward).
    bool is_forest() const;
    /// Forest with a unique minimal element.
    bool is_tree() const;

    std::vector<std::string> minimal_elements() const;
    std::vector<std::string> maximal_elements() const;
    /// Maximal elements of a forest; error when not a forest.
    std::vector<std::string> leaves() const;
    /// Minimal elements of a forest; error when not a forest.
    std::vector<std::string> roots() const;

    /// The initial chain of a tree up to and including the first branching
    /// node, bottom-up: every off-chain element lies above every chain
    /// element.  Error when not a tree.
    std::vector<std::string> trunk() const;

    /// Induced subposet on { k : k >= j }.
    Poset upper_set(const std::string& j) const;
    /// Induced subposet on the given labels.
    Poset restrict(const std::vector<std::string>& labels) const;

    /// Children in the forest sense: elements covering `label`.
    std::vector<std::string> children_of(const std::string& label) const;

    /// Relabels elements; the map must be injective over the element set.
    Poset relabel(const std::map<std::string, std::string>& rename) const;

    /// Elements sorted naturally and renamed 1..N; returns the new poset and
    /// the old->new map.
    std::pair<Poset, std::map<std::string, std::string>> canonical_integer_labels() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    int index_of(const std::string& label) const;  // -1 when absent
    int require(const std::string& label) const;
    void close_transitively();
    void validate_partial_order() const;

    std::vector<std::string> elements_;        // sorted by natural order
    std::vector<std::vector<bool>> strictly_;  // strictly_[i][j]: elements_[i] < elements_[j]
};

/// Disjoint union; right-hand labels that clash are suffixed with apostrophes
/// until fresh.  `right_renames` (if non-null) receives the applied renames.
Poset disjoint_union(const Poset& a, const Poset& b,
                     std::map<std::string, std::string>* right_renames = nullptr);

/// Label comparison that orders embedded integers numerically ("2" < "10").
bool natural_less(const std::string& a, const std::string& b);

}  // namespace suppos
