#pragma once

// The puzzle correspondence: a uniquely resolvable multiset over m
// categories turns into a grid puzzle with nm - |F| binary rules and a
// single solution, and the rules of any such puzzle fold back into the
// multiset.

#include <cstdint>
#include <string>
#include <vector>

#include "urm/constructions.hpp"

namespace urm::zebra {

struct Category {
    std::string name;
    std::vector<std::string> values; // one per person, distinct
};

/// "The person with value_a in category_a has value_b in category_b."
struct Rule {
    int cat_a = 0;
    int val_a = 0;
    int cat_b = 0;
    int val_b = 0;
    friend bool operator==(const Rule&, const Rule&) = default;
};

struct Puzzle {
    int n = 0; // people
    int m = 0; // categories
    std::vector<Category> categories;
    std::vector<Rule> rules;
    std::uint64_t seed = 0;
};

/// One way of grouping the values into n people: values[c][p] is the value
/// index person p holds in category c, a bijection per category. People
/// carry no identity of their own, so they are numbered by their value in
/// category 0; values[0] is always the identity.
struct PuzzleSolution {
    std::vector<std::vector<int>> values;
    friend bool operator==(const PuzzleSolution&, const PuzzleSolution&) = default;
};

/// Stock category and value names (colors, drinks, pets, ...), padded with
/// synthetic labels past the stock vocabulary.
[[nodiscard]] std::vector<Category> default_naming(int n, int m);

/// Class i of the instance becomes person i, with its value in each
/// category drawn from a seed-derived permutation. Each component of size
/// s >= 2 contributes s - 1 rules chaining that person's values across the
/// component's categories in increasing order, so the puzzle has exactly
/// nm - |F| rules. Unique solvability of the puzzle is inherited from the
/// instance.
[[nodiscard]] Puzzle puzzle_from_multiset(const constructions::ConstructedInstance& inst,
                                          const std::vector<Category>& naming, std::uint64_t seed);

/// Inverse direction: connected components of the rule graph become
/// category sets, values untouched by any rule become singletons. Throws
/// inconsistent_puzzle_error when rules chain two values of the same
/// category together.
[[nodiscard]] Multiset puzzle_to_multiset(const Puzzle& pz);

/// All solutions, up to `limit`, in a fixed order. Capped at n <= 8,
/// m <= 8.
[[nodiscard]] std::vector<PuzzleSolution> solve_puzzle(const Puzzle& pz, std::size_t limit);

/// Puzzle over the largest known construction for (n, m): rule count
/// nm - |best_construction(n, m)|.
[[nodiscard]] Puzzle generate_minimal_puzzle(int n, int m, std::uint64_t seed);

} // namespace urm::zebra
