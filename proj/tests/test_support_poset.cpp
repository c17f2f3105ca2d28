#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "suppos/io.hpp"
#include "suppos/support_poset.hpp"
#include "sampling.hpp"

using namespace suppos;

namespace {

// the five-variable running example and its family
MonomialIdeal five_var_ideal() { return parse_ideal("vars: 5\nx1*x2, x2*x4, x3, x4*x5"); }

SupportFamily five_var_family() {
    return SupportFamily(5, {IndexSet({1, 2}), IndexSet({2}), IndexSet({3}), IndexSet({4}),
                             IndexSet({4, 5})});
}

// the ten-variable example with a non-forest support poset
MonomialIdeal ten_var_ideal() {
    return parse_ideal("vars: 10\nx1*x2*x3*x4, x4*x6*x7, x1*x2*x4*x5*x6, x7*x8*x9, x7*x8*x10");
}

}  // namespace

TEST_CASE("support family of the five-variable example") {
    CHECK(support_family(five_var_ideal()) == five_var_family());
}

TEST_CASE("support family of the ten-variable example") {
    SupportFamily fam = support_family(ten_var_ideal());
    CHECK(fam.at(1) == IndexSet({1, 2, 4}));
    CHECK(fam.at(2) == IndexSet({1, 2, 4}));
    CHECK(fam.at(3) == IndexSet({1, 2, 3, 4}));
    CHECK(fam.at(4) == IndexSet({4}));
    CHECK(fam.at(5) == IndexSet({1, 2, 4, 5, 6}));
    CHECK(fam.at(6) == IndexSet({4, 6}));
    CHECK(fam.at(7) == IndexSet({7}));
    CHECK(fam.at(8) == IndexSet({7, 8}));
    CHECK(fam.at(9) == IndexSet({7, 8, 9}));
    CHECK(fam.at(10) == IndexSet({7, 8, 10}));
}

TEST_CASE("family invariants are validated") {
    CHECK_THROWS_AS(SupportFamily(2, {IndexSet({2}), IndexSet({2})}), Error);  // 1 not in C_1
    // transitivity: 2 in C_1 and 1 in C_3 force 2 in C_3
    CHECK_THROWS_AS(SupportFamily(3, {IndexSet({1, 2}), IndexSet({2}), IndexSet({1, 3})}), Error);
    CHECK_THROWS_AS(support_family(parse_ideal("vars: 2\nx1^2")), Error);  // not squarefree
}

TEST_CASE("support family of a non-full-support ideal is indexed by the support") {
    SupportFamily fam = support_family(parse_ideal("vars: 4\nx1*x3"));
    CHECK(fam.indices == std::vector<int>{1, 3});
    CHECK(fam.at(1) == IndexSet({1, 3}));
    CHECK_FALSE(fam.full());
    CHECK(fam.at(3) == IndexSet({1, 3}));
    CHECK_THROWS_AS(fam.at(2), Error);
}

TEST_CASE("support poset of the five-variable example") {
    Poset p = support_poset(five_var_ideal());
    CHECK(p.elements() == std::vector<std::string>{"1", "2", "3", "4", "5"});
    auto cov = p.covers();
    REQUIRE(cov.size() == 2);
    CHECK(p.less("2", "1"));
    CHECK(p.less("4", "5"));
    CHECK_FALSE(p.comparable("3", "1"));
    CHECK(support_poset(parse_ideal("vars: 1\nx1")) == Poset::antichain({"1"}));
}

TEST_CASE("support poset groups equal classes") {
    Poset p = support_poset(ten_var_ideal());
    CHECK(p.size() == 9);  // variables 1 and 2 share a class
    CHECK(p.has("1,2"));
    CHECK(p.less("4", "1,2"));
    CHECK(p.less("1,2", "3"));
    CHECK(p.less("1,2", "5"));
    CHECK(p.less("6", "5"));
    CHECK(p.less("7", "8"));
    CHECK_FALSE(p.is_forest());  // node 5 covers both 1,2 and 6
}

TEST_CASE("ordered support poset splits classes into chains") {
    Poset p = ordered_support_poset(ten_var_ideal());
    CHECK(p.size() == 10);
    std::vector<std::pair<std::string, std::string>> expected{
        {"1", "2"}, {"2", "3"}, {"2", "5"}, {"4", "1"}, {"4", "6"},
        {"6", "5"}, {"7", "8"}, {"8", "9"}, {"8", "10"}};
    auto cov = p.covers();
    std::sort(cov.begin(), cov.end());
    std::sort(expected.begin(), expected.end());
    CHECK(cov == expected);

    // reversing the tie order flips the chain inside the class {1,2}
    std::vector<int> order{2, 1, 3, 4, 5, 6, 7, 8, 9, 10};
    Poset q = ordered_support_poset(ten_var_ideal(), order);
    CHECK(q.less("2", "1"));
    CHECK(q.less("1", "3"));
}

TEST_CASE("ordered support poset equals the support poset when classes are distinct") {
    testing::Rng rng(42);
    int checked = 0;
    for (int trial = 0; trial < 80 && checked < 25; ++trial) {
        int n = testing::uniform(rng, 1, 5);
        MonomialIdeal raw = testing::random_ideal(rng, n, 4, 1);
        SupportFamily fam = support_family(raw);
        std::set<IndexSet> distinct(fam.sets.begin(), fam.sets.end());
        if (distinct.size() != fam.sets.size()) continue;
        ++checked;
        CHECK(ordered_support_poset(raw) == support_poset(raw));
    }
    CHECK(checked > 0);
}

TEST_CASE("ideals from subset collections") {
    SupportFamily fam = five_var_family();
    SigmaCollection sigma1{{IndexSet({1}), IndexSet({2, 4}), IndexSet({3}), IndexSet({5})}};
    CHECK(ideal_from_sigma(fam, sigma1) == five_var_ideal());
    SigmaCollection sigma2{{IndexSet({1}), IndexSet({2, 3}), IndexSet({3, 4}), IndexSet({5})}};
    CHECK(ideal_from_sigma(fam, sigma2) == parse_ideal("vars: 5\nx1*x2, x2*x3, x3*x4, x4*x5"));
    SigmaCollection sigma3{{IndexSet({1, 3}), IndexSet({3, 5}), IndexSet({1, 4}), IndexSet({2, 5})}};
    CHECK(ideal_from_sigma(fam, sigma3) ==
          parse_ideal("vars: 5\nx1*x2*x3, x3*x4*x5, x1*x2*x4, x2*x4*x5"));

    SupportFamily point(1, {IndexSet({1})});
    CHECK(ideal_from_sigma(point, SigmaCollection{{IndexSet({1})}}) == parse_ideal("vars: 1\nx1"));
    CHECK_THROWS_AS(ideal_from_sigma(fam, SigmaCollection{{IndexSet{}}}), Error);
}

TEST_CASE("collection conditions") {
    SupportFamily fam = five_var_family();
    SigmaCollection sigma1{{IndexSet({1}), IndexSet({2, 4}), IndexSet({3}), IndexSet({5})}};
    SigmaCollection sigma2{{IndexSet({1}), IndexSet({2, 3}), IndexSet({3, 4}), IndexSet({5})}};
    SigmaCollection sigma3{{IndexSet({1, 3}), IndexSet({3, 5}), IndexSet({1, 4}), IndexSet({2, 5})}};
    CHECK(sigma_conditions_hold(fam, sigma1));
    CHECK(sigma_conditions_hold(fam, sigma2));
    CHECK(sigma_conditions_hold(fam, sigma3));
    CHECK_FALSE(sigma_conditions_hold(fam, SigmaCollection{}));  // nothing covers variable 1

    for (const auto& sigma : {sigma1, sigma2, sigma3})
        CHECK(is_support_poset_of(fam, ideal_from_sigma(fam, sigma)));
}

TEST_CASE("the conditions recover the family on random samples") {
    testing::Rng rng(314);
    for (int trial = 0; trial < 60; ++trial) {
        int n = testing::uniform(rng, 1, 6);
        SupportFamily fam = testing::random_support_family(rng, n);
        // singleton collection always satisfies the conditions
        SigmaCollection singletons;
        for (int i = 1; i <= n; ++i) singletons.sets.push_back(IndexSet({i}));
        REQUIRE(sigma_conditions_hold(fam, singletons));
        CHECK(support_family(ideal_from_sigma(fam, singletons)) == fam);

        // random collections that happen to satisfy the conditions also work
        SigmaCollection random_sigma;
        int pieces = testing::uniform(rng, 1, n + 1);
        for (int p = 0; p < pieces; ++p) {
            IndexSet s;
            for (int i = 1; i <= n; ++i)
                if (testing::uniform(rng, 0, 2) == 0) s.insert(i);
            if (!s.empty()) random_sigma.sets.push_back(s);
        }
        if (!random_sigma.sets.empty() && sigma_conditions_hold(fam, random_sigma))
            CHECK(support_family(ideal_from_sigma(fam, random_sigma)) == fam);
    }
}

TEST_CASE("is_support_poset_of") {
    CHECK(is_support_poset_of(five_var_family(), five_var_ideal()));
    SupportFamily chain(3, {IndexSet({1}), IndexSet({1, 2}), IndexSet({1, 2, 3})});
    CHECK_FALSE(is_support_poset_of(chain, parse_ideal("vars: 3\nx1*x2*x3")));
    MonomialIdeal any = ten_var_ideal();
    CHECK(is_support_poset_of(support_family(any), any));
}

TEST_CASE("exhaustive realizability search") {
    // the increasing 3-chain family is not realizable
    SupportFamily chain(3, {IndexSet({1}), IndexSet({1, 2}), IndexSet({1, 2, 3})});
    CHECK_FALSE(brute_force_realizability(chain).has_value());

    SupportFamily points(2, {IndexSet({1}), IndexSet({2})});
    auto found = brute_force_realizability(points);
    REQUIRE(found.has_value());
    CHECK(support_family(*found) == points);

    CHECK_THROWS_AS(brute_force_realizability(five_var_family()), Error);  // n = 5 refused
}

TEST_CASE("support family output always satisfies the invariants") {
    testing::Rng rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        int n = testing::uniform(rng, 1, 6);
        MonomialIdeal raw = testing::random_ideal(rng, n, 5, 1);
        CHECK_NOTHROW(support_family(raw).validate());
    }
}

TEST_CASE("family JSON round-trip") {
    SupportFamily fam = five_var_family();
    CHECK(family_from_json(family_to_json(fam)) == fam);
    CHECK(family_from_json(R"({"n":5,"C":[[1,2],[2],[3],[4],[4,5]]})") == fam);
    SupportFamily partial = support_family(parse_ideal("vars: 4\nx1*x3"));
    CHECK(family_from_json(family_to_json(partial)) == partial);
    CHECK_THROWS_AS(family_from_json("{"), Error);
    CHECK_THROWS_AS(family_from_json(R"({"n":2,"C":[[2],[2]]})"), Error);
}
