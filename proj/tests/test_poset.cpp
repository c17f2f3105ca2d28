#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suppos/io.hpp"
#include "suppos/poset.hpp"
#include "sampling.hpp"

using namespace suppos;

namespace {

Poset chain3() { return Poset::chain({"1", "2", "3"}); }

Poset diamond() {
    return Poset::from_covers({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

// the running example tree: 1-2-3 trunk, 3 branches to 4, 5-6, 7-8, 8 to 9
// and 10, 10 to 11 and 12
Poset sample_tree() {
    return Poset::from_covers(
        {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12"},
        {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"3", "5"}, {"3", "7"}, {"5", "6"},
         {"7", "8"}, {"8", "9"}, {"8", "10"}, {"10", "11"}, {"10", "12"}});
}

}  // namespace

TEST_CASE("covers of basic posets") {
    CHECK(chain3().covers() == std::vector<std::pair<std::string, std::string>>{{"1", "2"}, {"2", "3"}});
    CHECK(Poset::antichain({"1", "2"}).covers().empty());
    Poset p = Poset::from_covers({"1", "2", "3", "4", "5"}, {{"2", "1"}, {"4", "5"}});
    auto cov = p.covers();
    CHECK(cov.size() == 2);
    CHECK(std::find(cov.begin(), cov.end(), std::make_pair(std::string("2"), std::string("1"))) != cov.end());
    CHECK(std::find(cov.begin(), cov.end(), std::make_pair(std::string("4"), std::string("5"))) != cov.end());
}

TEST_CASE("transitive closure of covers recovers the relation") {
    Poset t = sample_tree();
    CHECK(t.less("1", "12"));
    CHECK(t.less("7", "9"));
    CHECK_FALSE(t.less("4", "6"));
    CHECK_FALSE(t.comparable("9", "10"));
    // rebuilding from the cover list gives the same poset
    CHECK(Poset::from_covers(t.elements(), t.covers()) == t);
}

TEST_CASE("partial order validation") {
    CHECK_THROWS_AS(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
    CHECK_THROWS_AS(Poset::from_relation({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), Error);
    CHECK_THROWS_AS(Poset::from_covers({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(Poset::from_covers({"a"}, {{"a", "z"}}), Error);
}

TEST_CASE("forest and tree recognition") {
    CHECK(Poset::from_covers({"1", "2", "3", "4", "5"}, {{"2", "1"}, {"4", "5"}}).is_forest());
    CHECK_FALSE(diamond().is_forest());
    CHECK(Poset::antichain({"1"}).is_forest());
    CHECK(sample_tree().is_tree());
    CHECK_FALSE(Poset::antichain({"1", "2"}).is_tree());
}

TEST_CASE("leaves and roots") {
    Poset t = sample_tree();
    CHECK(t.leaves() == std::vector<std::string>{"4", "6", "9", "11", "12"});
    CHECK(t.roots() == std::vector<std::string>{"1"});
    Poset point = Poset::antichain({"7"});
    CHECK(point.leaves() == point.roots());
    Poset two_chains = disjoint_union(Poset::chain({"1", "2"}), Poset::chain({"3", "4"}));
    CHECK(two_chains.leaves().size() == 2);
    CHECK(two_chains.roots().size() == 2);
    CHECK_THROWS_AS(diamond().leaves(), Error);
}

TEST_CASE("trunk") {
    CHECK(chain3().trunk() == std::vector<std::string>{"1", "2", "3"});
    CHECK(sample_tree().trunk() == std::vector<std::string>{"1", "2", "3"});
    Poset bush = Poset::from_covers({"r", "a", "b"}, {{"r", "a"}, {"r", "b"}});
    CHECK(bush.trunk() == std::vector<std::string>{"r"});
    CHECK_THROWS_AS(Poset::antichain({"1", "2"}).trunk(), Error);

    // every off-trunk element exceeds every trunk element
    testing::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Poset f = testing::random_forest(rng, testing::uniform(rng, 1, 10), 0);
        if (!f.is_tree()) continue;
        auto trunk = f.trunk();
        for (const auto& e : f.elements()) {
            if (std::find(trunk.begin(), trunk.end(), e) != trunk.end()) continue;
            for (const auto& t : trunk) CHECK(f.less(t, e));
        }
        for (std::size_t i = 0; i + 1 < trunk.size(); ++i) CHECK(f.less(trunk[i], trunk[i + 1]));
    }
}

TEST_CASE("upper sets") {
    CHECK(Poset::chain({"1", "2", "3"}).upper_set("2") == Poset::chain({"2", "3"}));
    CHECK(Poset::antichain({"1", "2"}).upper_set("1") == Poset::antichain({"1"}));
    Poset sub = sample_tree().upper_set("8");
    CHECK(sub.elements() == std::vector<std::string>{"8", "9", "10", "11", "12"});
    CHECK(sub.is_tree());
    CHECK_THROWS_AS(sample_tree().upper_set("99"), Error);
}

TEST_CASE("disjoint union") {
    Poset u = disjoint_union(Poset::antichain({"1"}), Poset::antichain({"2"}));
    CHECK(u == Poset::antichain({"1", "2"}));
    CHECK(disjoint_union(chain3(), Poset::antichain({})) == chain3());

    // shape of the five-element example: two 2-chains plus a point
    Poset figure = disjoint_union(disjoint_union(Poset::chain({"2", "1"}), Poset::chain({"4", "5"})),
                                  Poset::antichain({"3"}));
    CHECK(figure.is_forest());
    CHECK(figure.covers().size() == 2);

    // clashing labels are renamed with provenance
    std::map<std::string, std::string> renames;
    Poset c = disjoint_union(chain3(), chain3(), &renames);
    CHECK(c.size() == 6);
    CHECK(renames.at("1") == "1'");
    CHECK(c.less("1'", "3'"));

    // forests are preserved and reflected
    testing::Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Poset a = testing::random_forest(rng, testing::uniform(rng, 1, 8));
        Poset b = testing::random_forest(rng, testing::uniform(rng, 1, 8));
        CHECK(disjoint_union(a, b).is_forest() == (a.is_forest() && b.is_forest()));
    }
}

TEST_CASE("poset text and DOT round-trip") {
    Poset t = sample_tree();
    CHECK(parse_poset(print_poset(t)) == t);
    Poset empty_covers = Poset::antichain({"a", "b"});
    CHECK(parse_poset(print_poset(empty_covers)) == empty_covers);
    std::string dot = poset_to_dot(Poset::chain({"1", "2"}));
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("\"1\" -> \"2\"") != std::string::npos);
    CHECK_THROWS_AS(parse_poset("covers: a<b"), Error);
}
