#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "corpus.hpp"
#include "urm/resolver.hpp"
#include "urm/zebra.hpp"

using namespace urm;
using namespace urm::zebra;

namespace {

std::vector<mask_t> sorted_masks(const Multiset& ms) {
    std::vector<mask_t> out = ms.raw_masks();
    std::sort(out.begin(), out.end());
    return out;
}

Puzzle figure_one() {
    Puzzle pz;
    pz.n = 2;
    pz.m = 5;
    pz.categories = default_naming(2, 5);
    pz.rules = {{0, 0, 1, 0}, {2, 0, 3, 0}, {4, 0, 2, 0}, {1, 1, 2, 1}};
    return pz;
}

} // namespace

TEST_CASE("default naming stays distinct past the stock vocabulary") {
    std::vector<Category> naming = default_naming(2, 5);
    REQUIRE(naming.size() == 5);
    CHECK(naming[0].name == "Color");
    CHECK(naming[0].values == std::vector<std::string>{"Red", "Blue"});
    CHECK(naming[4].values == std::vector<std::string>{"Tennis", "Chess"});

    std::vector<Category> big = default_naming(10, 12);
    std::set<std::string> names;
    for (const Category& cat : big) {
        names.insert(cat.name);
        CHECK(cat.values.size() == 10);
        CHECK(std::set<std::string>(cat.values.begin(), cat.values.end()).size() == 10);
    }
    CHECK(names.size() == 12);
    CHECK_THROWS_AS((void)default_naming(0, 3), malformed_input_error);
}

TEST_CASE("the worked two-person puzzle folds back to its multiset") {
    Puzzle pz = figure_one();
    Multiset ms = puzzle_to_multiset(pz);
    CHECK(ms == Multiset::from_lists(5, {{1, 2}, {1}, {2, 3}, {3, 4, 5}, {4}, {5}}));
    CHECK(is_uniquely_resolvable(ms, 2));

    std::vector<PuzzleSolution> sols = solve_puzzle(pz, 4);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].values ==
          std::vector<std::vector<int>>{{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
}

TEST_CASE("dropping a rule opens up a second reading") {
    Puzzle pz = figure_one();
    pz.rules.pop_back();
    CHECK(solve_puzzle(pz, 8).size() >= 2);

    pz.rules.clear();
    CHECK(puzzle_to_multiset(pz) == Multiset::from_lists(5, {{1}, {1}, {2}, {2}, {3}, {3},
                                                             {4}, {4}, {5}, {5}}));
    CHECK(solve_puzzle(pz, 64).size() >= 2);
}

TEST_CASE("puzzles built from instances have nm minus size rules") {
    std::uint64_t seed = 7;
    for (const auto& inst : testing::construction_corpus(5, 12)) {
        if (inst.n > 8) continue;
        Puzzle pz = puzzle_from_multiset(inst, default_naming(inst.n, inst.m), seed++);
        CHECK(pz.rules.size() ==
              static_cast<std::size_t>(inst.n) * inst.m - inst.ms.size());
        CHECK(sorted_masks(puzzle_to_multiset(pz)) == sorted_masks(inst.ms));
        CHECK(solve_puzzle(pz, 2).size() == 1);
    }
}

TEST_CASE("a non-unique instance yields a puzzle with several solutions") {
    constructions::ConstructedInstance inst{testing::fixture_multiset("fig3.json"),
                                            Partition{{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}},
                                            3, 5, 9, constructions::Provenance::SEARCH};
    REQUIRE(is_valid_partition(inst.ms, inst.partition));
    Puzzle pz = puzzle_from_multiset(inst, default_naming(3, 5), 11);
    CHECK(solve_puzzle(pz, 8).size() >= 2);
}

TEST_CASE("minimal puzzle generation hits the known rule counts") {
    CHECK(generate_minimal_puzzle(2, 5, 1).rules.size() == 4);
    CHECK(generate_minimal_puzzle(5, 4, 1).rules.size() == 9);
    CHECK(generate_minimal_puzzle(2, 2, 1).rules.size() == 1);

    Puzzle a = generate_minimal_puzzle(3, 4, 42);
    Puzzle b = generate_minimal_puzzle(3, 4, 42);
    CHECK(a.rules == b.rules);
    CHECK(a.seed == 42);
    CHECK(solve_puzzle(a, 2).size() == 1);

    Puzzle c = generate_minimal_puzzle(3, 4, 43);
    CHECK(c.rules != a.rules);
}

TEST_CASE("contradictory rule chains are rejected") {
    Puzzle pz;
    pz.n = 2;
    pz.m = 2;
    pz.categories = default_naming(2, 2);
    pz.rules = {{0, 0, 1, 0}, {0, 1, 1, 0}};
    CHECK_THROWS_AS((void)puzzle_to_multiset(pz), inconsistent_puzzle_error);
    CHECK_THROWS_AS((void)solve_puzzle(pz, 1), inconsistent_puzzle_error);

    pz.rules = {{0, 0, 0, 1}};
    CHECK_THROWS_AS((void)puzzle_to_multiset(pz), malformed_input_error);
    pz.rules = {{0, 0, 1, 2}};
    CHECK_THROWS_AS((void)puzzle_to_multiset(pz), malformed_input_error);
}

TEST_CASE("the solver enforces its size cap") {
    Puzzle pz;
    pz.n = 9;
    pz.m = 2;
    pz.categories = default_naming(9, 2);
    CHECK_THROWS_AS((void)solve_puzzle(pz, 1), capacity_error);
    CHECK_NOTHROW(puzzle_to_multiset(pz));
}
