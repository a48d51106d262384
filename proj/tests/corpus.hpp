#pragma once

// Shared test corpus: the figure fixtures, every construction in a given
// regime window, and a seeded stream of random balanced multisets.

#include <cstdint>
#include <vector>

#include "urm/constructions.hpp"
#include "urm/multiset.hpp"

namespace urm::testing {

inline constexpr std::uint64_t kCorpusSeed = 0xC0FFEE;

/// Balanced multisets drawn as unions of n random set partitions of [m],
/// m in 2..5, n in 1..4, at most 12 components, no repeated proper mask.
/// Resolvable by construction.
struct RandomInstance {
    Multiset ms;
    int n;
};
[[nodiscard]] std::vector<RandomInstance> random_balanced_corpus(std::size_t count, std::uint64_t seed = kCorpusSeed);

/// Every construction whose regime admits (n, m) with m <= max_m,
/// n <= max_n and claimed size <= max_size.
[[nodiscard]] std::vector<constructions::ConstructedInstance> construction_corpus(int max_m, std::size_t max_size,
                                                                                  int max_n = 1 << 20);

/// Parses tests/data/<name>.
[[nodiscard]] Multiset fixture_multiset(const char* name);

} // namespace urm::testing
