#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "suppos/io.hpp"
#include "suppos/monomial.hpp"
#include "sampling.hpp"

using namespace suppos;

namespace {

MonomialIdeal ideal(const std::string& text) { return parse_ideal(text); }
Monomial mono(const std::string& text, int vars) { return parse_monomial(text, vars); }

}  // namespace

TEST_CASE("support of a monomial") {
    CHECK(mono("x1*x2*x4", 5).support() == IndexSet({1, 2, 4}));
    CHECK(Monomial::unit(5).support().empty());
    CHECK(mono("x1^3*x2", 4).support() == IndexSet({1, 2}));
}

TEST_CASE("support of an ideal and full support") {
    MonomialIdeal i = ideal("vars: 5\nx1*x2, x2*x4, x3, x4*x5");
    CHECK(i.support() == IndexSet::range(1, 5));
    CHECK(i.has_full_support());
    MonomialIdeal j = ideal("vars: 2\nx1");
    CHECK(j.support() == IndexSet({1}));
    CHECK_FALSE(j.has_full_support());
    CHECK(MonomialIdeal(3).support().empty());
}

TEST_CASE("lcm and divisibility") {
    CHECK(lcm(mono("x1*x2", 3), mono("x2*x3", 3)) == mono("x1*x2*x3", 3));
    Monomial m = mono("x1^2*x3", 3);
    CHECK(lcm(m, m) == m);
    CHECK(lcm(mono("x1^3", 2), mono("x1*x2^2", 2)) == mono("x1^3*x2^2", 2));
    CHECK(divides(mono("x1", 2), mono("x1*x2", 2)));
    CHECK_FALSE(divides(mono("x1^2", 2), mono("x1*x2", 2)));
    CHECK(divides(m, m));
    CHECK_THROWS_AS(divides(mono("x1", 2), mono("x1", 3)), Error);
}

TEST_CASE("minimalize drops divisible monomials and is canonical") {
    MonomialIdeal a = MonomialIdeal::minimalize(2, {mono("x1", 2), mono("x1*x2", 2)});
    CHECK(a.to_string() == "x1");
    MonomialIdeal b = MonomialIdeal::minimalize(3, {mono("x1*x2", 3), mono("x2*x3", 3)});
    CHECK(b.generator_count() == 2);

    // order independence
    std::mt19937_64 rng(7);
    std::vector<Monomial> gens{mono("x1*x2", 4), mono("x2*x3", 4), mono("x1*x2*x3", 4),
                               mono("x3^2", 4), mono("x4", 4), mono("x3^2*x4", 4)};
    MonomialIdeal reference = MonomialIdeal::minimalize(4, gens);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(MonomialIdeal::minimalize(4, gens) == reference);
    }
    // idempotent
    CHECK(MonomialIdeal::minimalize(4, reference.generators()) == reference);
    CHECK_THROWS_AS(MonomialIdeal::minimalize(2, {Monomial::unit(2)}), Error);
}

TEST_CASE("sum and intersection") {
    MonomialIdeal x1 = ideal("vars: 2\nx1"), x2 = ideal("vars: 2\nx2");
    CHECK(ideal_sum(x1, x2).to_string() == "x1, x2");
    CHECK(ideal_sum(x1, x1) == x1);
    CHECK(ideal_sum(x1, ideal("vars: 2\nx1*x2")) == x1);
    CHECK(ideal_intersection(x1, x2).to_string() == "x1*x2");
    CHECK(ideal_intersection(x1, x1) == x1);

    // disjoint supports: the intersection is exactly the set of products
    MonomialIdeal a = ideal("vars: 5\nx1*x2, x2");
    MonomialIdeal b = ideal("vars: 5\nx3, x4*x5");
    MonomialIdeal prod = ideal_intersection(a, b);
    CHECK(prod == ideal("vars: 5\nx2*x3, x2*x4*x5"));

    CHECK_THROWS_AS(ideal_sum(x1, ideal("vars: 3\nx1")), Error);
}

TEST_CASE("intersection agrees with the membership oracle") {
    testing::Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = testing::uniform(rng, 1, 5);
        MonomialIdeal a = testing::random_ideal(rng, n, 4, 2);
        MonomialIdeal b = testing::random_ideal(rng, n, 4, 2);
        MonomialIdeal both = ideal_intersection(a, b);
        for (int probe = 0; probe < 40; ++probe) {
            std::vector<int> e(n, 0);
            int budget = 6;
            for (int i = 0; i < n; ++i) {
                e[i] = testing::uniform(rng, 0, std::min(3, budget));
                budget -= e[i];
            }
            Monomial w{std::move(e)};
            CHECK(both.contains(w) == (a.contains(w) && b.contains(w)));
        }
    }
}

TEST_CASE("sum and intersection are commutative and associative") {
    testing::Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int n = testing::uniform(rng, 1, 4);
        MonomialIdeal a = testing::random_ideal(rng, n, 3, 2);
        MonomialIdeal b = testing::random_ideal(rng, n, 3, 2);
        MonomialIdeal c = testing::random_ideal(rng, n, 3, 2);
        CHECK(ideal_sum(a, b) == ideal_sum(b, a));
        CHECK(ideal_intersection(a, b) == ideal_intersection(b, a));
        CHECK(ideal_sum(ideal_sum(a, b), c) == ideal_sum(a, ideal_sum(b, c)));
        CHECK(ideal_intersection(ideal_intersection(a, b), c) ==
              ideal_intersection(a, ideal_intersection(b, c)));
    }
}

TEST_CASE("variable isomorphism search") {
    MonomialIdeal a = ideal("vars: 3\nx1*x2");
    CHECK(find_variable_isomorphism(a, a) == std::vector<int>{1, 2, 3});
    MonomialIdeal b = ideal("vars: 3\nx2*x3");
    auto perm = find_variable_isomorphism(a, b);
    REQUIRE(perm.has_value());
    CHECK(a.rename_variables(*perm) == b);
    CHECK_FALSE(find_variable_isomorphism(ideal("vars: 3\nx1*x2"), ideal("vars: 3\nx1*x2*x3")));

    // symmetric success on random relabelings
    testing::Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = testing::uniform(rng, 2, 6);
        MonomialIdeal i = testing::random_ideal(rng, n, 5, 2);
        std::vector<int> perm2(n);
        for (int k = 0; k < n; ++k) perm2[k] = k + 1;
        std::shuffle(perm2.begin(), perm2.end(), rng);
        MonomialIdeal j = i.rename_variables(perm2);
        auto found = find_variable_isomorphism(i, j);
        REQUIRE(found.has_value());
        CHECK(i.rename_variables(*found) == j);
        CHECK(find_variable_isomorphism(j, i).has_value());

        MonomialIdeal other = testing::random_ideal(rng, n, 5, 2);
        CHECK(find_variable_isomorphism(i, other).has_value() ==
              find_variable_isomorphism(other, i).has_value());
    }
}

TEST_CASE("ideal text round-trip") {
    const char* samples[] = {
        "vars: 5\nx1*x2, x2*x4, x3, x4*x5\n",
        "vars: 2\nx1^3, x1*x2^2, x2^3\n",
        "vars: 3\n0\n",
        "vars: 1\nx1\n",
    };
    for (const char* s : samples) CHECK(print_ideal(parse_ideal(s)) == s);
    for (const char* s : samples) {
        MonomialIdeal i = parse_ideal(s);
        CHECK(parse_ideal(print_ideal(i)) == i);
    }
    CHECK(parse_ideal("vars:2\n  x2 * x1 ,x2^2").to_string() == "x1*x2, x2^2");
    CHECK_THROWS_AS(parse_ideal("x1*x2"), Error);
    CHECK_THROWS_AS(parse_ideal("vars: 2\nx3"), Error);
    CHECK_THROWS_AS(parse_ideal("vars: 2\nx1^0"), Error);
}
