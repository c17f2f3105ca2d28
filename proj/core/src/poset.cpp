#include "suppos/poset.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "suppos/monomial.hpp"  // Error / fail

namespace suppos {

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) &&
            std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            std::string da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
            std::string ta = da, tb = db;
            ta.erase(0, std::min(ta.find_first_not_of('0'), ta.size() - 1));
            tb.erase(0, std::min(tb.find_first_not_of('0'), tb.size() - 1));
            if (ta.size() != tb.size()) return ta.size() < tb.size();
            if (ta != tb) return ta < tb;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

int Poset::index_of(const std::string& label) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), label, natural_less);
    if (it == elements_.end() || *it != label) return -1;
    return static_cast<int>(it - elements_.begin());
}

int Poset::require(const std::string& label) const {
    int i = index_of(label);
    if (i < 0) fail("unknown-label", "poset has no element '" + label + "'");
    return i;
}

void Poset::close_transitively() {
    const std::size_t n = elements_.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (strictly_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (strictly_[k][j]) strictly_[i][j] = true;
}

void Poset::validate_partial_order() const {
    const std::size_t n = elements_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (strictly_[i][i]) fail("not-a-poset", "relation is not irreflexive at '" + elements_[i] + "'");
        for (std::size_t j = 0; j < n; ++j)
            if (strictly_[i][j] && strictly_[j][i])
                fail("not-a-poset", "antisymmetry fails between '" + elements_[i] + "' and '" + elements_[j] + "'");
    }
}

static std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end(), natural_less);
    auto dup = std::adjacent_find(v.begin(), v.end());
    if (dup != v.end()) fail("duplicate-label", "duplicate poset element '" + *dup + "'");
    return v;
}

Poset Poset::from_relation(std::vector<std::string> elements,
                           std::vector<std::pair<std::string, std::string>> strict_pairs) {
    Poset p;
    p.elements_ = sorted_unique(std::move(elements));
    p.strictly_.assign(p.elements_.size(), std::vector<bool>(p.elements_.size(), false));
    for (const auto& [a, b] : strict_pairs) p.strictly_[p.require(a)][p.require(b)] = true;
    // the given pairs must already be transitive
    Poset closed = p;
    closed.close_transitively();
    if (closed.strictly_ != p.strictly_) fail("not-a-poset", "comparable pairs are not transitively closed");
    p.validate_partial_order();
    return p;
}

Poset Poset::from_covers(std::vector<std::string> elements,
                         std::vector<std::pair<std::string, std::string>> cover_pairs) {
    Poset p;
    p.elements_ = sorted_unique(std::move(elements));
    p.strictly_.assign(p.elements_.size(), std::vector<bool>(p.elements_.size(), false));
    for (const auto& [a, b] : cover_pairs) p.strictly_[p.require(a)][p.require(b)] = true;
    p.close_transitively();
    p.validate_partial_order();
    return p;
}

Poset Poset::antichain(std::vector<std::string> elements) {
    return from_covers(std::move(elements), {});
}

Poset Poset::chain(std::vector<std::string> elements_bottom_up) {
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i + 1 < elements_bottom_up.size(); ++i)
        covers.emplace_back(elements_bottom_up[i], elements_bottom_up[i + 1]);
    return from_covers(std::move(elements_bottom_up), std::move(covers));
}

bool Poset::has(const std::string& label) const { return index_of(label) >= 0; }

bool Poset::less(const std::string& a, const std::string& b) const {
    return strictly_[require(a)][require(b)];
}

bool Poset::leq(const std::string& a, const std::string& b) const {
    if (a == b) {
        require(a);
        return true;
    }
    return less(a, b);
}

bool Poset::comparable(const std::string& a, const std::string& b) const {
    return leq(a, b) || leq(b, a);
}

std::vector<std::pair<std::string, std::string>> Poset::covers() const {
    std::vector<std::pair<std::string, std::string>> out;
    const std::size_t n = elements_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!strictly_[i][j]) continue;
            bool direct = true;
            for (std::size_t k = 0; k < n && direct; ++k)
                if (strictly_[i][k] && strictly_[k][j]) direct = false;
            if (direct) out.emplace_back(elements_[i], elements_[j]);
        }
    return out;
}

bool Poset::is_forest() const {
    // every element covers at most one element
    std::vector<int> below(elements_.size(), 0);
    for (const auto& [a, b] : covers())
        if (++below[require(b)] > 1) return false;
    return true;
}

bool Poset::is_tree() const { return !empty() && is_forest() && minimal_elements().size() == 1; }

std::vector<std::string> Poset::minimal_elements() const {
    std::vector<std::string> out;
    const std::size_t n = elements_.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < n && minimal; ++j)
            if (strictly_[j][i]) minimal = false;
        if (minimal) out.push_back(elements_[i]);
    }
    return out;
}

std::vector<std::string> Poset::maximal_elements() const {
    std::vector<std::string> out;
    const std::size_t n = elements_.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < n && maximal; ++j)
            if (strictly_[i][j]) maximal = false;
        if (maximal) out.push_back(elements_[i]);
    }
    return out;
}

std::vector<std::string> Poset::leaves() const {
    if (!is_forest()) fail("not-a-forest", "leaves() requires a forest");
    return maximal_elements();
}

std::vector<std::string> Poset::roots() const {
    if (!is_forest()) fail("not-a-forest", "roots() requires a forest");
    return minimal_elements();
}

std::vector<std::string> Poset::children_of(const std::string& label) const {
    std::vector<std::string> out;
    for (const auto& [a, b] : covers())
        if (a == label) out.push_back(b);
    return out;
}

std::vector<std::string> Poset::trunk() const {
    if (!is_tree()) fail("not-a-tree", "trunk() requires a tree");
    std::vector<std::string> chain;
    std::string current = minimal_elements().front();
    for (;;) {
        chain.push_back(current);
        auto kids = children_of(current);
        if (kids.size() != 1) break;
        current = kids.front();
    }
    return chain;
}

Poset Poset::restrict(const std::vector<std::string>& labels) const {
    Poset p;
    p.elements_ = sorted_unique(labels);
    const std::size_t m = p.elements_.size();
    p.strictly_.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            p.strictly_[i][j] = strictly_[require(p.elements_[i])][require(p.elements_[j])];
    return p;
}

Poset Poset::upper_set(const std::string& j) const {
    require(j);
    std::vector<std::string> up;
    for (const std::string& e : elements_)
        if (e == j || less(j, e)) up.push_back(e);
    return restrict(up);
}

Poset Poset::relabel(const std::map<std::string, std::string>& rename) const {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    auto apply = [&](const std::string& s) {
        auto it = rename.find(s);
        return it == rename.end() ? s : it->second;
    };
    for (const std::string& e : elements_) labels.push_back(apply(e));
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = 0; j < elements_.size(); ++j)
            if (strictly_[i][j]) pairs.emplace_back(apply(elements_[i]), apply(elements_[j]));
    return from_relation(std::move(labels), std::move(pairs));
}

std::pair<Poset, std::map<std::string, std::string>> Poset::canonical_integer_labels() const {
    std::map<std::string, std::string> rename;
    int next = 1;
    for (const std::string& e : elements_) rename[e] = std::to_string(next++);
    return {relabel(rename), rename};
}

Poset disjoint_union(const Poset& a, const Poset& b, std::map<std::string, std::string>* right_renames) {
    std::set<std::string> taken(a.elements().begin(), a.elements().end());
    std::map<std::string, std::string> rename;
    for (const std::string& e : b.elements()) {
        std::string fresh = e;
        while (taken.count(fresh)) fresh += '\'';
        taken.insert(fresh);
        if (fresh != e) rename[e] = fresh;
    }
    if (right_renames) *right_renames = rename;
    Poset rb = rename.empty() ? b : b.relabel(rename);

    std::vector<std::string> labels(a.elements());
    labels.insert(labels.end(), rb.elements().begin(), rb.elements().end());
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const Poset* part : {&a, static_cast<const Poset*>(&rb)})
        for (const std::string& x : part->elements())
            for (const std::string& y : part->elements())
                if (x != y && part->less(x, y)) pairs.emplace_back(x, y);
    return Poset::from_relation(std::move(labels), std::move(pairs));
}

}  // namespace suppos
