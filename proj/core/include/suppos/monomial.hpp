// Exact monomials and monomial ideals over a fixed ambient set of variables.
//
// Variables are 1-based everywhere in the public interface.  A MonomialIdeal
// always stores its unique minimal generating set (an antichain under
// divisibility), sorted for canonical equality and stable output.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace suppos {

/// Runtime error carrying a short machine-readable code such as
/// "ambient-mismatch" or "parse".  The CLI prints the code verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

/// A finite set of 1-based variable indices, kept sorted and duplicate-free.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> indices);

    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static IndexSet range(int lo, int hi);

    bool contains(int i) const;
    bool subset_of(const IndexSet& other) const;
    IndexSet unite(const IndexSet& other) const;
    IndexSet intersect(const IndexSet& other) const;
    IndexSet minus(const IndexSet& other) const;
    void insert(int i);

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    const std::vector<int>& values() const { return idx_; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

    /// Comma-joined indices, e.g. "1,2,4"; empty set prints as "".
    std::string to_string() const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.idx_ < b.idx_; }

private:
    std::vector<int> idx_;
};

/// A monomial given by its dense exponent vector; the ambient variable count
/// is the vector length.  The unit monomial (all zeros) is representable but
/// never a generator of an ideal.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);

    static Monomial unit(int vars);
    static Monomial variable(int vars, int i);
    static Monomial from_support(int vars, const IndexSet& support);

    int vars() const { return static_cast<int>(exp_.size()); }
    int exponent(int i) const;  // 1-based
    const std::vector<int>& exponents() const { return exp_; }
    int total_degree() const;
    bool is_unit() const;
    bool is_squarefree() const;

    /// Indices of variables dividing the monomial.
    IndexSet support() const;
    /// Bit i-1 set iff x_i divides; only valid for vars() <= 64.
    std::uint64_t support_mask() const;

    Monomial times(const Monomial& other) const;
    /// Componentwise difference; requires other | *this.
    Monomial divide_by(const Monomial& other) const;

    /// Text form "x1*x2^3"; the unit monomial prints as "1".
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Ambient count first, then exponent vectors lexicographically.
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<int> exp_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// A monomial ideal represented by its minimal generating set.  The zero
/// ideal (no generators) is allowed.
class MonomialIdeal {
public:
    /// The zero ideal in `vars` variables.
    explicit MonomialIdeal(int vars = 0);

    /// Discards every monomial strictly divisible by another one and sorts
    /// the rest; idempotent and order-independent.  Rejects unit monomials.
    static MonomialIdeal minimalize(int vars, std::vector<Monomial> monomials);

    int vars() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_squarefree() const;

    /// Membership test: some generator divides m.
    bool contains(const Monomial& m) const;
    bool has_generator(const Monomial& m) const;

    /// Union of the generators' supports.
    IndexSet support() const;
    bool has_full_support() const;

    /// Image under a variable permutation; perm[i-1] is the image of i.
    MonomialIdeal rename_variables(const std::vector<int>& perm) const;

    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_ = 0;
    std::vector<Monomial> gens_;  // sorted antichain
};

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);

/// Searches for a variable permutation carrying G(a) onto G(b); the result
/// maps i to perm[i-1].  Prunes by generator degree multisets and per-variable
/// exponent profiles before backtracking.
std::optional<std::vector<int>> find_variable_isomorphism(const MonomialIdeal& a,
                                                          const MonomialIdeal& b);

}  // namespace suppos
