#include "suppos/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace suppos {

Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (long long t = 1; t <= k; ++t) {
        r *= (n - k + t);
        r /= t;
    }
    return r;
}

// ------------------------------------------------------------------ lines

MonomialIdeal lines_ideal(int n, int m) {
    if (n < 2) fail("out-of-range", "disjoint lines need n >= 2");
    if (m < 1) fail("out-of-range", "chain length must be positive");
    const int vars = n * m;
    // variables (i-1)m+from .. (i-1)m+to inside block i
    auto block = [&](int i, int from, int to) {
        return IndexSet::range((i - 1) * m + from, (i - 1) * m + to);
    };
    std::vector<Monomial> gens;
    gens.push_back(Monomial::from_support(vars, block(1, 1, m)));
    for (int i = 2; i <= n; ++i) {
        gens.push_back(Monomial::from_support(vars, block(i, 1, m)));
        for (int j = 1; j <= m - 1; ++j)
            gens.push_back(Monomial::from_support(vars, block(1, 1, m - j).unite(block(i, 1, j))));
    }
    return MonomialIdeal::minimalize(vars, std::move(gens));
}

MonomialIdeal lines_depolarized(int n, int m) {
    if (n < 2) fail("out-of-range", "disjoint lines need n >= 2");
    if (m < 1) fail("out-of-range", "chain length must be positive");
    std::vector<Monomial> gens;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> e(n, 0);
        e[i - 1] = m;
        gens.emplace_back(std::move(e));
    }
    for (int j = 2; j <= n; ++j)
        for (int k = 1; k <= m - 1; ++k) {
            std::vector<int> e(n, 0);
            e[0] = m - k;
            e[j - 1] = k;
            gens.emplace_back(std::move(e));
        }
    return MonomialIdeal::minimalize(n, std::move(gens));
}

Integer lines_betti(int n, int m, int i) {
    if (n < 2 || m < 1) fail("out-of-range", "lines Betti data needs n >= 2, m >= 1");
    if (i < 0 || i > n - 1) return 0;
    if (i == 0) return Integer(n) + Integer(n - 1) * (m - 1);
    Integer total = binomial(n - 1, i);
    for (int j = 2; j <= n; ++j) total += Integer(m - 1) * binomial(1 + n - j, i);
    total += binomial(n - 1, i + 1);
    return total;
}

int lines_projective_dimension(int n, int m) {
    if (n < 2 || m < 1) fail("out-of-range", "lines Betti data needs n >= 2, m >= 1");
    return n - 1;
}

int lines_regularity(int n, int m) {
    if (n < 2 || m < 1) fail("out-of-range", "lines Betti data needs n >= 2, m >= 1");
    return (n - 1) * (m - 1);
}

// --------------------------------------------------------------- diamonds

MonomialIdeal diamonds_ideal(int m) {
    if (m < 2) fail("out-of-range", "disjoint diamonds need m >= 2");
    const int vars = 4 * m;
    auto v = [&](int block, int slot) { return 4 * (block - 1) + slot; };  // slot 1..4
    std::vector<Monomial> gens;
    for (int i = 1; i <= m; ++i)
        gens.push_back(Monomial::from_support(
            vars, IndexSet({v(i, 1), v(i, 2), v(i, 3), v(i, 4)})));
    for (int i = 1; i <= m; ++i) {
        int next = i == m ? 1 : i + 1;
        gens.push_back(Monomial::from_support(
            vars, IndexSet({v(i, 1), v(i, 2), v(next, 1), v(next, 3)})));
    }
    return MonomialIdeal::minimalize(vars, std::move(gens));
}

MonomialIdeal diamonds_depolarized(int m) {
    if (m < 2) fail("out-of-range", "disjoint diamonds need m >= 2");
    const int vars = 2 * m;
    auto first = [&](int block) { return 2 * block - 1; };
    auto second = [&](int block) { return 2 * block; };
    std::vector<Monomial> gens;
    for (int i = 1; i <= m; ++i) {
        std::vector<int> e(vars, 0);
        e[first(i) - 1] = 3;
        e[second(i) - 1] = 1;
        gens.emplace_back(std::move(e));
    }
    for (int i = 1; i <= m; ++i) {
        int next = i == m ? 1 : i + 1;
        std::vector<int> e(vars, 0);
        e[first(i) - 1] = 2;
        e[first(next) - 1] += 1;
        e[second(next) - 1] += 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::minimalize(vars, std::move(gens));
}

Integer diamond_count(int m, int a, int b) {
    if (m < 1 || a < 0 || b < 0)
        fail("out-of-range", "diamond counts are defined for m >= 1 and a, b >= 0");
    static std::map<std::tuple<int, int, int>, Integer> memo;
    static std::mutex memo_mutex;
    std::scoped_lock lock(memo_mutex);
    auto compute = [&](auto&& self, int aa, int bb) -> Integer {
        if (bb == 0) return aa == 0 ? Integer(m) : Integer(m + aa);
        if (aa == 0) return binomial(m, bb + 1);
        if (aa == 1) return binomial(m, bb) + binomial(m, bb + 1);
        auto key = std::make_tuple(m, aa, bb);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Integer v = self(self, aa - 2, bb - 1) + self(self, aa - 1, bb);
        memo.emplace(key, v);
        return v;
    };
    return compute(compute, a, b);
}

Integer diamond_count_closed(int m, int a, int b) {
    if (m < 1 || a < 0 || b < 0)
        fail("out-of-range", "diamond counts are defined for m >= 1 and a, b >= 0");
    Integer total = 0;
    for (int t = 0; t <= b + 1 && 2 * t <= a + 1; ++t)
        total += binomial(a + 1 - t, t) * binomial(m, b + 1 - t);
    return total;
}

Integer diamonds_betti(int m, int i) {
    if (m < 2) fail("out-of-range", "disjoint diamonds need m >= 2");
    if (i < 0) return 0;
    if (i == 0) return Integer(2) * m;
    if (m == 2)
        fail("out-of-range",
             "the closed Betti formula needs m >= 3 (m = 2 would index the recurrence negatively); "
             "use the homology oracle instead");
    return Integer(2) * diamond_count(m, m - 3, i - 1) + diamond_count(m, m - 2, i);
}

int diamonds_projective_dimension(int m) {
    if (m < 2) fail("out-of-range", "disjoint diamonds need m >= 2");
    return m / 2 + m - 1;
}

int diamonds_regularity(int m) {
    if (m < 2) fail("out-of-range", "disjoint diamonds need m >= 2");
    return 2 * m;
}

// ------------------------------------------------------------ leaf ideals

namespace {

std::vector<int> integer_labels(const Poset& poset) {
    std::vector<int> out;
    for (const std::string& label : poset.elements()) {
        for (char c : label)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail("bad-label", "expected integer labels 1..n, found '" + label + "'");
        out.push_back(std::stoi(label));
    }
    std::vector<int> sorted(out);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != static_cast<int>(k) + 1)
            fail("bad-label", "labels must be exactly 1..n");
    return out;
}

}  // namespace

MonomialIdeal leaf_ideal(const Poset& forest) {
    if (!forest.is_forest()) fail("not-a-forest", "leaf ideals are defined for forests");
    std::vector<int> labels = integer_labels(forest);
    const int n = static_cast<int>(labels.size());
    std::vector<Monomial> gens;
    for (const std::string& leaf : forest.leaves()) {
        IndexSet path;
        for (const std::string& e : forest.elements())
            if (e == leaf || forest.less(e, leaf)) path.insert(std::stoi(e));
        gens.push_back(Monomial::from_support(n, path));
    }
    return MonomialIdeal::minimalize(n, std::move(gens));
}

ForestReduction reduce_forest(const Poset& forest) {
    if (!forest.is_forest()) fail("not-a-forest", "reduction is defined for forests");
    ForestReduction result;
    for (const std::string& e : forest.elements()) result.merged_into[e] = e;

    Poset current = forest;
    for (;;) {
        // find a node with exactly one child and merge the pair into the child
        std::string parent, child;
        bool found = false;
        for (const std::string& e : current.elements()) {
            auto kids = current.children_of(e);
            if (kids.size() == 1) {
                parent = e;
                child = kids.front();
                found = true;
                break;
            }
        }
        if (!found) break;
        std::vector<std::string> labels;
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const std::string& e : current.elements())
            if (e != parent) labels.push_back(e);
        for (const std::string& a : labels)
            for (const std::string& b : labels)
                if (a != b && current.less(a, b)) pairs.emplace_back(a, b);
        current = Poset::from_relation(std::move(labels), std::move(pairs));
        for (auto& [orig, rep] : result.merged_into)
            if (rep == parent) rep = child;
    }
    result.forest = std::move(current);
    return result;
}

std::vector<std::vector<std::string>> reduction_stages(const Poset& forest) {
    std::vector<std::vector<std::string>> stages;
    stages.push_back(forest.elements());
    Poset current = reduce_forest(forest).forest;
    if (current.elements() != stages.back()) stages.push_back(current.elements());
    for (;;) {
        // delete the root of every tree that still has children
        std::set<std::string> drop;
        for (const std::string& r : current.roots())
            if (!current.children_of(r).empty()) drop.insert(r);
        if (drop.empty()) break;
        std::vector<std::string> kept;
        for (const std::string& e : current.elements())
            if (!drop.count(e)) kept.push_back(e);
        current = reduce_forest(current.restrict(kept)).forest;
        stages.push_back(current.elements());
    }
    return stages;
}

// ---------------------------------------------------------------- windows

MonomialIdeal consecutive_kn(int k, int n) {
    if (k < 1 || k > n) fail("out-of-range", "window size must satisfy 1 <= k <= n");
    std::vector<Monomial> gens;
    for (int i = 1; i + k - 1 <= n; ++i)
        gens.push_back(Monomial::from_support(n, IndexSet::range(i, i + k - 1)));
    return MonomialIdeal::minimalize(n, std::move(gens));
}

SupportFamily kn_support_family(int k, int n) {
    if (k < 1 || k > n) fail("out-of-range", "window size must satisfy 1 <= k <= n");
    std::vector<IndexSet> sets;
    if (k < n - k + 1) {
        for (int i = 1; i <= k; ++i) sets.push_back(IndexSet::range(i, k));
        for (int i = k + 1; i <= n - k; ++i) sets.push_back(IndexSet::range(i, i));
        for (int i = n - k + 1; i <= n; ++i) sets.push_back(IndexSet::range(n - k + 1, i));
    } else {
        for (int i = 1; i <= n - k; ++i) sets.push_back(IndexSet::range(i, k));
        for (int i = n - k + 1; i <= k; ++i) sets.push_back(IndexSet::range(n - k + 1, k));
        for (int i = k + 1; i <= n; ++i) sets.push_back(IndexSet::range(n - k + 1, i));
    }
    return SupportFamily(n, std::move(sets));
}

MonomialIdeal k_out_of_n(int k, int n) {
    if (k < 1 || k > n) fail("out-of-range", "degree must satisfy 1 <= k <= n");
    std::vector<Monomial> gens;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i + 1;
    for (;;) {
        gens.push_back(Monomial::from_support(n, IndexSet(pick)));
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int q = pos + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
    }
    return MonomialIdeal::minimalize(n, std::move(gens));
}

MonomialIdeal copolar_kn(int k, int n) {
    if (k < 2 || k > n) fail("out-of-range", "copolar windows need 2 <= k <= n");
    // depolarize each window onto the canonical chain partition of the
    // support poset: [1..k], the middle singletons, [n-k+1..n]
    if (2 * k >= n + 1) {
        const int vars = (n == k) ? 1 : 2;
        std::vector<Monomial> gens;
        for (int j = 0; j <= n - k; ++j) {
            std::vector<int> e(vars, 0);
            e[0] = k - j;
            if (j > 0) e[1] = j;
            gens.emplace_back(std::move(e));
        }
        return MonomialIdeal::minimalize(vars, std::move(gens));
    }
    const int middles = n - 2 * k;
    const int vars = 2 + middles;  // a, b_1..b_middles, c
    std::vector<Monomial> gens;
    for (int j = 0; j <= n - k; ++j) {  // window j+1 .. j+k
        std::vector<int> e(vars, 0);
        e[0] = std::max(0, k - j);
        for (int t = std::max(1, j + 1 - k); t <= std::min(j, middles); ++t) e[t] = 1;
        e[vars - 1] = std::max(0, j - middles);
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::minimalize(vars, std::move(gens));
}

// -------------------------------------------------------- series-parallel

SPExpr SPExpr::var(int i) {
    SPExpr e;
    e.kind = Kind::Variable;
    e.variable = i;
    return e;
}

SPExpr SPExpr::sum(SPExpr l, SPExpr r) {
    SPExpr e;
    e.kind = Kind::Sum;
    e.left = std::make_unique<SPExpr>(std::move(l));
    e.right = std::make_unique<SPExpr>(std::move(r));
    return e;
}

SPExpr SPExpr::intersection(SPExpr l, SPExpr r) {
    SPExpr e;
    e.kind = Kind::Intersection;
    e.left = std::make_unique<SPExpr>(std::move(l));
    e.right = std::make_unique<SPExpr>(std::move(r));
    return e;
}

SPExpr SPExpr::clone() const {
    if (kind == Kind::Variable) return var(variable);
    SPExpr e;
    e.kind = kind;
    e.left = std::make_unique<SPExpr>(left->clone());
    e.right = std::make_unique<SPExpr>(right->clone());
    return e;
}

namespace {

struct SPParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    SPExpr parse_sum() {
        SPExpr e = parse_product();
        while (eat('+')) e = SPExpr::sum(std::move(e), parse_product());
        return e;
    }
    SPExpr parse_product() {
        SPExpr e = parse_atom();
        while (eat('*')) e = SPExpr::intersection(std::move(e), parse_atom());
        return e;
    }
    SPExpr parse_atom() {
        skip();
        if (eat('(')) {
            SPExpr e = parse_sum();
            if (!eat(')')) fail("parse", "missing ')' in series-parallel expression");
            return e;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("parse", "expected variable index in series-parallel expression");
        return SPExpr::var(std::stoi(text.substr(start, pos - start)));
    }
};

void collect_vars(const SPExpr& e, std::vector<int>& out) {
    if (e.kind == SPExpr::Kind::Variable) {
        out.push_back(e.variable);
        return;
    }
    collect_vars(*e.left, out);
    collect_vars(*e.right, out);
}

MonomialIdeal sp_eval(const SPExpr& e, int vars) {
    if (e.kind == SPExpr::Kind::Variable)
        return MonomialIdeal::minimalize(vars, {Monomial::variable(vars, e.variable)});
    MonomialIdeal l = sp_eval(*e.left, vars), r = sp_eval(*e.right, vars);
    return e.kind == SPExpr::Kind::Sum ? ideal_sum(l, r) : ideal_intersection(l, r);
}

}  // namespace

SPExpr SPExpr::parse(const std::string& text) {
    SPParser parser{text};
    SPExpr e = parser.parse_sum();
    parser.skip();
    if (parser.pos != text.size()) fail("parse", "trailing input in series-parallel expression");
    return e;
}

std::string SPExpr::to_string() const {
    if (kind == Kind::Variable) return std::to_string(variable);
    const char op = kind == Kind::Sum ? '+' : '*';
    return "(" + left->to_string() + " " + op + " " + right->to_string() + ")";
}

MonomialIdeal sp_ideal(const SPExpr& expr) {
    std::vector<int> vars;
    collect_vars(expr, vars);
    std::vector<int> sorted(vars);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != static_cast<int>(k) + 1)
            fail("invalid-sp-expr", "every variable 1..n must appear exactly once");
    return sp_eval(expr, static_cast<int>(vars.size()));
}

namespace {

SPExpr sp_from_subtree(const Poset& forest, const std::string& node) {
    SPExpr own = SPExpr::var(std::stoi(node));
    auto kids = forest.children_of(node);
    if (kids.empty()) return own;
    SPExpr sum = sp_from_subtree(forest, kids.front());
    for (std::size_t k = 1; k < kids.size(); ++k)
        sum = SPExpr::sum(std::move(sum), sp_from_subtree(forest, kids[k]));
    return SPExpr::intersection(std::move(own), std::move(sum));
}

}  // namespace

SPExpr sp_from_forest(const Poset& forest) {
    if (!forest.is_forest()) fail("not-a-forest", "series-parallel expressions come from forests");
    integer_labels(forest);
    auto roots = forest.roots();
    if (roots.empty()) fail("not-a-forest", "empty forest");
    SPExpr e = sp_from_subtree(forest, roots.front());
    for (std::size_t k = 1; k < roots.size(); ++k)
        e = SPExpr::sum(std::move(e), sp_from_subtree(forest, roots[k]));
    return e;
}

}  // namespace suppos
