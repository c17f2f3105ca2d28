#include "suppos/homology.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "suppos/monomial.hpp"  // Error / fail

namespace suppos::homology {

namespace {

using boost::multiprecision::cpp_int;

struct Overflow {};

long long abs_gcd(long long a, long long b) { return std::gcd(a, b); }
cpp_int abs_gcd(const cpp_int& a, const cpp_int& b) { return boost::multiprecision::gcd(a, b); }

// Elimination kernel shared by the 64-bit and big-integer paths.  Row
// operations plus row rescaling preserve rank, so each updated row is divided
// by its content to keep entries small.
template <typename T, typename MulSub>
long long rank_impl(std::vector<std::vector<T>> m, MulSub mul_sub) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    long long rank = 0;
    std::size_t top = 0;
    for (std::size_t col = 0; col < cols && top < rows; ++col) {
        // prefer a +-1 pivot to limit growth
        std::size_t pivot = rows;
        for (std::size_t r = top; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            if (pivot == rows) pivot = r;
            if (m[r][col] == 1 || m[r][col] == -1) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[top], m[pivot]);
        const T p = m[top][col];
        for (std::size_t r = top + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const T f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] = mul_sub(p, m[r][c], f, m[top][c]);
            T content(0);
            for (std::size_t c = col; c < cols; ++c) {
                T v = m[r][c] < 0 ? T(-m[r][c]) : m[r][c];
                content = (content == 0) ? v : T(abs_gcd(content, v));
                if (content == 1) break;
            }
            if (content > 1)
                for (std::size_t c = col; c < cols; ++c) m[r][c] /= content;
        }
        ++top;
        ++rank;
    }
    return rank;
}

long long rank_int64(const std::vector<std::vector<long long>>& rows) {
    auto mul_sub = [](long long p, long long a, long long f, long long b) -> long long {
        __int128 v = static_cast<__int128>(p) * a - static_cast<__int128>(f) * b;
        if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
            throw Overflow{};
        return static_cast<long long>(v);
    };
    return rank_impl<long long>(rows, mul_sub);
}

long long rank_bigint(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<cpp_int>> m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) m[r].assign(rows[r].begin(), rows[r].end());
    auto mul_sub = [](const cpp_int& p, const cpp_int& a, const cpp_int& f, const cpp_int& b) {
        return cpp_int(p * a - f * b);
    };
    return rank_impl<cpp_int>(std::move(m), mul_sub);
}

}  // namespace

long long matrix_rank(const std::vector<std::vector<long long>>& rows) {
    try {
        return rank_int64(rows);
    } catch (const Overflow&) {
        return rank_bigint(rows);
    }
}

bool is_cone(const std::vector<std::uint64_t>& faces, int vertex_count) {
    if (faces.empty()) return false;
    std::uint64_t apex_candidates = (vertex_count >= 64) ? ~std::uint64_t(0)
                                                         : ((std::uint64_t(1) << vertex_count) - 1);
    std::vector<std::uint64_t> sorted(faces);
    std::sort(sorted.begin(), sorted.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) > std::popcount(b); });
    for (std::uint64_t f : sorted) {
        bool maximal = true;
        for (std::uint64_t g : sorted) {
            if (std::popcount(g) <= std::popcount(f)) break;
            if ((f & g) == f) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            apex_candidates &= f;
            if (!apex_candidates) return false;
        }
    }
    return apex_candidates != 0;
}

std::vector<long long> reduced_betti(const std::vector<std::uint64_t>& faces, int vertex_count) {
    if (vertex_count > 63) fail("too-many-variables", "homology is limited to 63 vertices");
    std::vector<std::unordered_map<std::uint64_t, int>> bucket(vertex_count + 1);
    bool has_empty = false;
    for (std::uint64_t f : faces) {
        int c = std::popcount(f);
        if (c == 0) has_empty = true;
        int id = static_cast<int>(bucket[c].size());
        bucket[c].emplace(f, id);
    }
    if (!has_empty) fail("bad-complex", "complexes must contain the empty face");

    // rank[c]: rank of the boundary map from cardinality-c faces one step down
    std::vector<long long> rank(vertex_count + 2, 0);
    for (int c = 1; c <= vertex_count; ++c) {
        if (bucket[c].empty()) break;
        std::vector<std::vector<long long>> matrix(bucket[c - 1].size(),
                                                   std::vector<long long>(bucket[c].size(), 0));
        for (const auto& [face, col] : bucket[c]) {
            int sign = 1;
            std::uint64_t rest = face;
            while (rest) {
                std::uint64_t bit = rest & (~rest + 1);
                std::uint64_t sub = face ^ bit;
                auto it = bucket[c - 1].find(sub);
                if (it == bucket[c - 1].end()) fail("bad-complex", "complex not closed under subsets");
                matrix[it->second][col] = sign;
                sign = -sign;
                rest ^= bit;
            }
        }
        rank[c] = matrix_rank(matrix);
    }

    std::vector<long long> h(vertex_count + 1, 0);
    for (int c = 0; c <= vertex_count; ++c)
        h[c] = static_cast<long long>(bucket[c].size()) - rank[c] - rank[c + 1];
    return h;
}

}  // namespace suppos::homology
