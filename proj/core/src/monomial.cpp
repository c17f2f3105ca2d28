#include "suppos/monomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace suppos {

namespace {

void check_same_ambient(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        fail("ambient-mismatch", "monomials live in different variable counts (" +
                                     std::to_string(a.vars()) + " vs " + std::to_string(b.vars()) + ")");
}

}  // namespace

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::vector<int> indices) : idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

IndexSet IndexSet::range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return IndexSet(std::move(v));
}

bool IndexSet::contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

bool IndexSet::subset_of(const IndexSet& other) const {
    return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

IndexSet IndexSet::unite(const IndexSet& other) const {
    std::vector<int> v;
    std::set_union(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                   std::back_inserter(v));
    return IndexSet(std::move(v));
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
    std::vector<int> v;
    std::set_intersection(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                          std::back_inserter(v));
    return IndexSet(std::move(v));
}

IndexSet IndexSet::minus(const IndexSet& other) const {
    std::vector<int> v;
    std::set_difference(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                        std::back_inserter(v));
    return IndexSet(std::move(v));
}

void IndexSet::insert(int i) {
    auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
    if (it == idx_.end() || *it != i) idx_.insert(it, i);
}

std::string IndexSet::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < idx_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(idx_[k]);
    }
    return s;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    for (int e : exp_)
        if (e < 0) fail("negative-exponent", "monomial exponents must be nonnegative");
}

Monomial Monomial::unit(int vars) { return Monomial(std::vector<int>(vars, 0)); }

Monomial Monomial::variable(int vars, int i) {
    if (i < 1 || i > vars) fail("bad-variable", "variable index " + std::to_string(i) + " out of 1.." + std::to_string(vars));
    std::vector<int> e(vars, 0);
    e[i - 1] = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::from_support(int vars, const IndexSet& support) {
    std::vector<int> e(vars, 0);
    for (int i : support) {
        if (i < 1 || i > vars) fail("bad-variable", "support index out of range");
        e[i - 1] = 1;
    }
    return Monomial(std::move(e));
}

int Monomial::exponent(int i) const {
    if (i < 1 || i > vars()) fail("bad-variable", "variable index out of range");
    return exp_[i - 1];
}

int Monomial::total_degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

bool Monomial::is_unit() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e <= 1; });
}

IndexSet Monomial::support() const {
    std::vector<int> v;
    for (int i = 0; i < vars(); ++i)
        if (exp_[i] > 0) v.push_back(i + 1);
    return IndexSet(std::move(v));
}

std::uint64_t Monomial::support_mask() const {
    if (vars() > 64) fail("too-many-variables", "support_mask requires at most 64 variables");
    std::uint64_t mask = 0;
    for (int i = 0; i < vars(); ++i)
        if (exp_[i] > 0) mask |= std::uint64_t(1) << i;
    return mask;
}

Monomial Monomial::times(const Monomial& other) const {
    check_same_ambient(*this, other);
    std::vector<int> e(exp_);
    for (int i = 0; i < vars(); ++i) e[i] += other.exp_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::divide_by(const Monomial& other) const {
    check_same_ambient(*this, other);
    std::vector<int> e(exp_);
    for (int i = 0; i < vars(); ++i) {
        e[i] -= other.exp_[i];
        if (e[i] < 0) fail("not-divisible", "quotient of non-divisible monomials");
    }
    return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
    if (is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < vars(); ++i) {
        if (exp_[i] == 0) continue;
        if (!first) out << '*';
        first = false;
        out << 'x' << (i + 1);
        if (exp_[i] > 1) out << '^' << exp_[i];
    }
    return out.str();
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars()) return a.vars() < b.vars();
    return a.exp_ < b.exp_;
}

bool divides(const Monomial& a, const Monomial& b) {
    check_same_ambient(a, b);
    for (int i = 1; i <= a.vars(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_ambient(a, b);
    std::vector<int> e(a.exponents());
    for (int i = 0; i < a.vars(); ++i) e[i] = std::max(e[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same_ambient(a, b);
    std::vector<int> e(a.exponents());
    for (int i = 0; i < a.vars(); ++i) e[i] = std::min(e[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

// ----------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(int vars) : n_(vars) {
    if (vars < 0) fail("bad-ambient", "negative variable count");
}

MonomialIdeal MonomialIdeal::minimalize(int vars, std::vector<Monomial> monomials) {
    MonomialIdeal ideal(vars);
    for (const Monomial& m : monomials) {
        if (m.vars() != vars) fail("ambient-mismatch", "generator ambient differs from ideal ambient");
        if (m.is_unit()) fail("unit-generator", "the unit monomial cannot generate a proper ideal");
    }
    // x1-major listing: descending lex on exponent vectors
    std::sort(monomials.begin(), monomials.end(), [](const Monomial& x, const Monomial& y) { return y < x; });
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < monomials.size() && !redundant; ++j)
            if (j != i && divides(monomials[j], monomials[i])) redundant = true;
        if (!redundant) kept.push_back(monomials[i]);
    }
    ideal.gens_ = std::move(kept);
    return ideal;
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.vars() != n_) fail("ambient-mismatch", "membership test across different ambients");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::has_generator(const Monomial& m) const {
    return std::binary_search(gens_.begin(), gens_.end(), m,
                              [](const Monomial& x, const Monomial& y) { return y < x; });
}

IndexSet MonomialIdeal::support() const {
    IndexSet s;
    for (const Monomial& g : gens_) s = s.unite(g.support());
    return s;
}

bool MonomialIdeal::has_full_support() const { return support() == IndexSet::range(1, n_); }

MonomialIdeal MonomialIdeal::rename_variables(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) fail("bad-permutation", "permutation length differs from ambient");
    std::vector<bool> seen(n_, false);
    for (int p : perm) {
        if (p < 1 || p > n_ || seen[p - 1]) fail("bad-permutation", "not a permutation of 1..n");
        seen[p - 1] = true;
    }
    std::vector<Monomial> imgs;
    for (const Monomial& g : gens_) {
        std::vector<int> e(n_, 0);
        for (int i = 0; i < n_; ++i) e[perm[i] - 1] = g.exponents()[i];
        imgs.emplace_back(std::move(e));
    }
    return minimalize(n_, std::move(imgs));
}

std::string MonomialIdeal::to_string() const {
    if (gens_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    return s;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars() != b.vars()) fail("ambient-mismatch", "ideal sum across different ambients");
    std::vector<Monomial> gens(a.generators());
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::minimalize(a.vars(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars() != b.vars()) fail("ambient-mismatch", "ideal intersection across different ambients");
    std::vector<Monomial> gens;
    for (const Monomial& g : a.generators())
        for (const Monomial& h : b.generators()) gens.push_back(lcm(g, h));
    return MonomialIdeal::minimalize(a.vars(), std::move(gens));
}

// ------------------------------------------------- variable isomorphism

namespace {

// Profile of one variable: sorted (own exponent, generator degree) pairs over
// the generators containing it.  Invariant under variable permutations.
using VarProfile = std::vector<std::pair<int, int>>;

std::vector<VarProfile> variable_profiles(const MonomialIdeal& ideal) {
    std::vector<VarProfile> prof(ideal.vars());
    for (const Monomial& g : ideal.generators()) {
        int deg = g.total_degree();
        for (int i = 1; i <= ideal.vars(); ++i)
            if (g.exponent(i) > 0) prof[i - 1].emplace_back(g.exponent(i), deg);
    }
    for (auto& p : prof) std::sort(p.begin(), p.end());
    return prof;
}

struct IsoSearch {
    const MonomialIdeal& a;
    const MonomialIdeal& b;
    int n;
    std::vector<std::vector<int>> candidates;  // per variable of `a`, 1-based images
    std::vector<int> order;                    // variable assignment order (0-based)
    std::vector<int> image;                    // 0 = unassigned, else 1-based
    std::vector<bool> used;
    std::vector<int> remaining;                // per generator of `a`: unassigned vars left

    bool assign(std::size_t k) {
        if (k == order.size()) return true;
        int v = order[k];
        for (int w : candidates[v]) {
            if (used[w - 1]) continue;
            image[v] = w;
            used[w - 1] = true;
            bool ok = true;
            std::vector<int> touched;
            const auto& gens = a.generators();
            for (std::size_t gi = 0; gi < gens.size() && ok; ++gi) {
                if (gens[gi].exponent(v + 1) == 0) continue;
                touched.push_back(static_cast<int>(gi));
                if (--remaining[gi] == 0) {
                    std::vector<int> e(n, 0);
                    for (int i = 0; i < n; ++i)
                        if (gens[gi].exponents()[i] > 0) e[image[i] - 1] = gens[gi].exponents()[i];
                    if (!b.has_generator(Monomial(std::move(e)))) ok = false;
                }
            }
            if (ok && assign(k + 1)) return true;
            for (int gi : touched) ++remaining[gi];
            used[w - 1] = false;
            image[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_variable_isomorphism(const MonomialIdeal& a,
                                                          const MonomialIdeal& b) {
    if (a.vars() != b.vars() || a.generator_count() != b.generator_count()) return std::nullopt;
    const int n = a.vars();
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i + 1;
    if (a.generators() == b.generators()) return identity;

    auto degree_multiset = [](const MonomialIdeal& ideal) {
        std::vector<std::vector<int>> degs;
        for (const Monomial& g : ideal.generators()) {
            std::vector<int> e(g.exponents());
            std::sort(e.begin(), e.end());
            degs.push_back(std::move(e));
        }
        std::sort(degs.begin(), degs.end());
        return degs;
    };
    if (degree_multiset(a) != degree_multiset(b)) return std::nullopt;

    auto pa = variable_profiles(a);
    auto pb = variable_profiles(b);
    IsoSearch search{a, b, n, {}, {}, std::vector<int>(n, 0), std::vector<bool>(n, false), {}};
    search.candidates.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (pa[i] == pb[j]) search.candidates[i].push_back(j + 1);
        if (search.candidates[i].empty()) return std::nullopt;
    }
    search.order.resize(n);
    for (int i = 0; i < n; ++i) search.order[i] = i;
    std::sort(search.order.begin(), search.order.end(), [&](int u, int v) {
        auto cu = search.candidates[u].size(), cv = search.candidates[v].size();
        return cu != cv ? cu < cv : u < v;
    });
    search.remaining.resize(a.generator_count());
    for (std::size_t gi = 0; gi < a.generator_count(); ++gi)
        search.remaining[gi] = static_cast<int>(a.generators()[gi].support().size());

    if (!search.assign(0)) return std::nullopt;
    return search.image;
}

}  // namespace suppos
