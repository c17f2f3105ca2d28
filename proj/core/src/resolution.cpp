#include "suppos/resolution.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

#include "suppos/homology.hpp"

namespace suppos {

// ------------------------------------------------------------ pivot orders

PivotOrder PivotOrder::canonical() {
    return {"canonical", [](const MonomialIdeal& ideal) { return ideal.generators(); }};
}

PivotOrder PivotOrder::reverse_canonical() {
    return {"reverse", [](const MonomialIdeal& ideal) {
                std::vector<Monomial> gens(ideal.generators());
                std::reverse(gens.begin(), gens.end());
                return gens;
            }};
}

PivotOrder PivotOrder::paper_lines() {
    // Rank pure powers (0, variable), two-variable generators containing x1
    // by (1, x1-exponent, other variable), everything else last; the pivot is
    // the smallest rank, so sort descending.
    return {"paper-lines", [](const MonomialIdeal& ideal) {
                auto rank = [](const Monomial& m) {
                    IndexSet supp = m.support();
                    if (supp.size() == 1) return std::tuple<int, int, int>(0, supp.values()[0], 0);
                    if (supp.size() == 2 && supp.contains(1))
                        return std::tuple<int, int, int>(1, m.exponent(1), supp.values()[1]);
                    return std::tuple<int, int, int>(2, 0, 0);
                };
                std::vector<Monomial> gens(ideal.generators());
                std::stable_sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
                    auto ra = rank(a), rb = rank(b);
                    if (ra != rb) return ra > rb;
                    return b < a;
                });
                return gens;
            }};
}

PivotOrder PivotOrder::paper_diamonds() {
    // After stripping the common factor of the node, generators of the shape
    // x_{2i-1}^3 x_{2i} are pivoted in increasing block order i; the rest are
    // never pivoted while such a generator remains.
    return {"paper-diamonds", [](const MonomialIdeal& ideal) {
                const auto& gens = ideal.generators();
                Monomial common = gens.empty() ? Monomial::unit(ideal.vars()) : gens.front();
                for (const Monomial& g : gens) common = gcd(common, g);
                auto block = [&](const Monomial& g) -> int {  // 0 when not a block generator
                    Monomial h = g.divide_by(common);
                    IndexSet supp = h.support();
                    if (supp.size() != 2) return 0;
                    int a = supp.values()[0], b = supp.values()[1];
                    if (b != a + 1 || a % 2 == 0) return 0;
                    if (h.exponent(a) == 3 && h.exponent(b) == 1) return (a + 1) / 2;
                    return 0;
                };
                std::vector<Monomial> sorted(gens);
                std::stable_sort(sorted.begin(), sorted.end(), [&](const Monomial& x, const Monomial& y) {
                    int bx = block(x), by = block(y);
                    bool ax = bx > 0, ay = by > 0;
                    if (ax != ay) return ay;            // plain generators first
                    if (ax && bx != by) return bx > by; // block generators by descending index
                    return x < y;
                });
                return sorted;
            }};
}

PivotOrder PivotOrder::by_name(const std::string& name) {
    if (name == "canonical") return canonical();
    if (name == "reverse") return reverse_canonical();
    if (name == "paper-lines") return paper_lines();
    if (name == "paper-diamonds") return paper_diamonds();
    fail("unknown-order", "no pivot order named '" + name + "'");
}

// ------------------------------------------------------------- tree build

namespace {

void build_node(MVTNode& node, const PivotOrder& order, std::size_t& count) {
    ++count;
    const MonomialIdeal& ideal = node.ideal;
    if (ideal.generator_count() <= 1) return;

    std::vector<Monomial> arranged = order.arrange(ideal);
    if (arranged.size() != ideal.generator_count())
        fail("bad-order", "pivot order changed the generator count");
    Monomial pivot = arranged.back();
    arranged.pop_back();

    std::vector<Monomial> intersect;
    intersect.reserve(arranged.size());
    for (const Monomial& g : arranged) intersect.push_back(lcm(g, pivot));

    node.left = std::make_unique<MVTNode>();
    node.left->ideal = MonomialIdeal::minimalize(ideal.vars(), std::move(intersect));
    node.left->position = node.position * 2;
    node.left->dimension = node.dimension + 1;

    node.right = std::make_unique<MVTNode>();
    node.right->ideal = MonomialIdeal::minimalize(ideal.vars(), std::move(arranged));
    node.right->position = node.position * 2 + 1;
    node.right->dimension = node.dimension;

    build_node(*node.left, order, count);
    build_node(*node.right, order, count);
}

}  // namespace

MVTree mvt_build(const MonomialIdeal& ideal, const PivotOrder& order) {
    if (ideal.is_zero()) fail("zero-ideal", "Mayer-Vietoris trees need at least one generator");
    MVTree tree;
    tree.root = std::make_unique<MVTNode>();
    tree.root->ideal = ideal;
    tree.root->position = 1;
    tree.root->dimension = 0;
    build_node(*tree.root, order, tree.node_count);
    return tree;
}

// -------------------------------------------------------------- BettiTable

void BettiTable::add(int d, const Monomial& mu, long long count) {
    if (count == 0) return;
    counts_[{d, mu}] += count;
}

long long BettiTable::at(int d, const Monomial& mu) const {
    auto it = counts_.find({d, mu});
    return it == counts_.end() ? 0 : it->second;
}

long long BettiTable::total(int d) const {
    long long t = 0;
    for (const auto& [key, c] : counts_)
        if (key.first == d) t += c;
    return t;
}

long long BettiTable::graded(int d, int total_degree) const {
    long long t = 0;
    for (const auto& [key, c] : counts_)
        if (key.first == d && key.second.total_degree() == total_degree) t += c;
    return t;
}

int BettiTable::max_dimension() const {
    int d = -1;
    for (const auto& [key, c] : counts_)
        if (c != 0) d = std::max(d, key.first);
    return d;
}

std::string BettiTable::to_text() const {
    if (counts_.empty()) return "(empty Betti table)\n";
    int dmax = max_dimension();
    int jmin = -1, jmax = -1;
    for (const auto& [key, c] : counts_) {
        if (c == 0) continue;
        int j = key.second.total_degree();
        if (jmin < 0 || j < jmin) jmin = j;
        if (j > jmax) jmax = j;
    }
    std::ostringstream out;
    auto cell = [&](const std::string& s) {
        out << s;
        for (std::size_t k = s.size(); k < 8; ++k) out << ' ';
    };
    cell("deg\\d");
    for (int d = 0; d <= dmax; ++d) cell(std::to_string(d));
    out << '\n';
    for (int j = jmin; j <= jmax; ++j) {
        bool any = false;
        for (int d = 0; d <= dmax && !any; ++d) any = graded(d, j) != 0;
        if (!any) continue;
        cell(std::to_string(j) + ":");
        for (int d = 0; d <= dmax; ++d) {
            long long v = graded(d, j);
            cell(v ? std::to_string(v) : ".");
        }
        out << '\n';
    }
    cell("total:");
    for (int d = 0; d <= dmax; ++d) cell(std::to_string(total(d)));
    out << '\n';
    return out.str();
}

// ------------------------------------------------------------- MVT counts

namespace {

void collect_relevant(const MVTNode& node, std::vector<std::pair<int, Monomial>>& out) {
    if (node.relevant())
        for (const Monomial& g : node.ideal.generators()) out.emplace_back(node.dimension, g);
    if (node.left) collect_relevant(*node.left, out);
    if (node.right) collect_relevant(*node.right, out);
}

}  // namespace

MVTCounts mvt_counts(const MVTree& tree) {
    if (!tree.root) fail("zero-ideal", "empty tree");
    std::vector<std::pair<int, Monomial>> occurrences;
    collect_relevant(*tree.root, occurrences);

    MVTCounts counts;
    std::map<Monomial, long long> per_multidegree;
    for (const auto& [d, mu] : occurrences) {
        counts.full.add(d, mu);
        ++per_multidegree[mu];
    }
    for (const auto& [d, mu] : occurrences)
        if (per_multidegree[mu] == 1) counts.once.add(d, mu);
    return counts;
}

MVTBounds mvt_bounds(const MonomialIdeal& ideal, const PivotOrder& order) {
    MVTCounts counts = mvt_counts(mvt_build(ideal, order));
    MVTBounds bounds{counts.once, counts.full};

    // sharpen: at a multidegree whose occurrence dimensions are pairwise
    // non-consecutive no cancellation can happen, so the counts are exact
    std::map<Monomial, std::vector<int>> dims;
    for (const auto& [key, c] : counts.full.entries())
        if (c != 0) dims[key.second].push_back(key.first);
    for (auto& [mu, ds] : dims) {
        std::sort(ds.begin(), ds.end());
        bool spaced = true;
        for (std::size_t k = 0; k + 1 < ds.size() && spaced; ++k)
            if (ds[k + 1] == ds[k] + 1) spaced = false;
        if (!spaced) continue;
        for (int d : ds) {
            long long full = counts.full.at(d, mu);
            long long have = bounds.lower.at(d, mu);
            if (have < full) bounds.lower.add(d, mu, full - have);
        }
    }
    return bounds;
}

// ------------------------------------------------------------------ oracle

std::size_t oracle_subset_cap() {
    if (const char* env = std::getenv("SUPPOS_MAX_SUBSETS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t(1) << 20;
}

namespace {

// All distinct lcms of nonempty generator subsets.
std::vector<Monomial> subset_lcms(const MonomialIdeal& ideal) {
    const std::size_t r = ideal.generator_count();
    const std::size_t cap = oracle_subset_cap();
    if (r >= 63 || (std::size_t(1) << r) > cap)
        fail("scale-cap", "generator subsets exceed the oracle cap of " + std::to_string(cap) +
                              " (set SUPPOS_MAX_SUBSETS to raise it)");
    const int n = ideal.vars();
    const std::size_t total = std::size_t(1) << r;
    std::vector<int> buffer(total * n, 0);
    std::set<Monomial> seen;
    for (std::size_t mask = 1; mask < total; ++mask) {
        std::size_t low = mask & (~mask + 1);
        std::size_t rest = mask ^ low;
        int gi = std::countr_zero(low);
        const std::vector<int>& gen = ideal.generators()[gi].exponents();
        int* dst = buffer.data() + mask * n;
        const int* prev = buffer.data() + rest * n;
        for (int i = 0; i < n; ++i) dst[i] = std::max(prev[i], gen[i]);
        seen.insert(Monomial(std::vector<int>(dst, dst + n)));
    }
    return std::vector<Monomial>(seen.begin(), seen.end());
}

}  // namespace

BettiTable betti_oracle(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) fail("zero-ideal", "the zero ideal has no resolution to measure");
    BettiTable table;
    for (const Monomial& mu : subset_lcms(ideal)) {
        // critical mask per dividing generator: the variables whose exponent
        // matches mu; a face survives iff it avoids some generator's mask
        std::vector<int> verts(mu.support().values());
        const int v = static_cast<int>(verts.size());
        if (v > 25)
            fail("scale-cap", "upper Koszul complex on " + std::to_string(v) + " vertices is beyond desk scale");

        std::vector<std::uint64_t> crit;
        std::uint64_t crit_union = 0;
        for (const Monomial& g : ideal.generators()) {
            if (!divides(g, mu)) continue;
            std::uint64_t mask = 0;
            for (int k = 0; k < v; ++k)
                if (g.exponent(verts[k]) == mu.exponent(verts[k]) && g.exponent(verts[k]) > 0)
                    mask |= std::uint64_t(1) << k;
            crit.push_back(mask);
            crit_union |= mask;
        }
        // a vertex outside every critical mask is a cone apex
        if (v > 0 && crit_union != ((std::uint64_t(1) << v) - 1)) continue;

        std::vector<std::uint64_t> faces;
        for (std::uint64_t s = 0; s < (std::uint64_t(1) << v); ++s) {
            for (std::uint64_t mask : crit)
                if ((s & mask) == 0) {
                    faces.push_back(s);
                    break;
                }
        }
        if (homology::is_cone(faces, v)) continue;
        std::vector<long long> h = homology::reduced_betti(faces, v);
        for (int d = 0; d <= v; ++d)
            if (h[d] != 0) table.add(d, mu, h[d]);
    }
    return table;
}

bool taylor_is_minimal(const MonomialIdeal& ideal) {
    const std::size_t r = ideal.generator_count();
    if (r > 20) fail("too-large", "Taylor minimality is checked for at most 20 generators");
    if (r == 0) fail("zero-ideal", "the zero ideal has no Taylor complex");
    const int n = ideal.vars();
    const std::size_t total = std::size_t(1) << r;
    std::vector<int> buffer(total * n, 0);
    for (std::size_t mask = 1; mask < total; ++mask) {
        std::size_t low = mask & (~mask + 1);
        std::size_t rest = mask ^ low;
        int gi = std::countr_zero(low);
        const std::vector<int>& gen = ideal.generators()[gi].exponents();
        int* dst = buffer.data() + mask * n;
        const int* prev = buffer.data() + rest * n;
        for (int i = 0; i < n; ++i) dst[i] = std::max(prev[i], gen[i]);
    }
    for (std::size_t mask = 3; mask < total; ++mask) {
        if (std::popcount(mask) < 2) continue;
        const int* full = buffer.data() + mask * n;
        for (std::size_t bits = mask; bits;) {
            std::size_t bit = bits & (~bits + 1);
            bits ^= bit;
            const int* sub = buffer.data() + (mask ^ bit) * n;
            if (std::equal(full, full + n, sub)) return false;
        }
    }
    return true;
}

DerivedInvariants derived_invariants(const BettiTable& table) {
    if (table.empty()) fail("empty-table", "no Betti entries to derive invariants from");
    DerivedInvariants inv;
    inv.projective_dimension = table.max_dimension();
    int reg = std::numeric_limits<int>::min();
    for (const auto& [key, c] : table.entries())
        if (c != 0) reg = std::max(reg, key.second.total_degree() - key.first - 1);
    inv.regularity = reg;
    return inv;
}

}  // namespace suppos
