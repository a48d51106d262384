#pragma once

// Brute-force ground truth, kept deliberately independent of the optimized
// resolver: a no-cleverness reference resolver and exhaustive searches for
// the largest uniquely resolvable families at small m.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

#include "urm/constructions.hpp"
#include "urm/resolver.hpp"

namespace urm::oracle {

struct SearchBudget {
    std::int64_t max_candidates = std::int64_t{1} << 60;
    std::int64_t max_nodes = std::int64_t{1} << 60;
    std::chrono::milliseconds time_cap = std::chrono::hours(24);
    /// Cooperative cancellation; the search stops at the next checkpoint
    /// and reports best-so-far with exhausted = false.
    const std::atomic<bool>* cancel = nullptr;
};

struct ExactResult {
    std::int64_t value = 0;
    std::optional<constructions::ConstructedInstance> witness;
    /// True when the whole candidate space was enumerated, certifying the
    /// value; false when a budget or cancellation cut the search short.
    bool exhausted = false;
    std::int64_t candidates_examined = 0;
    std::int64_t nodes = 0;
};

/// All set partitions of [m] in restricted-growth-string order; blocks
/// ordered by first element. m <= 6.
[[nodiscard]] std::vector<std::vector<SubsetMask>> set_partitions(int m);

/// Reference resolver: walks every assignment of components to at most n
/// classes in restricted-growth order, keeps the assignments whose classes
/// all cover [m] exactly, dedupes canonical forms at the end. No search
/// ordering tricks. Component count capped at 14.
[[nodiscard]] ResolutionSet naive_collect(const Multiset& ms, int n, std::size_t limit);

/// Full-enumeration report from naive_collect; agrees with
/// enumerate_resolutions on status and witnesses.
[[nodiscard]] ResolutionReport naive_resolve(const Multiset& ms, int n);

/// Largest uniquely resolvable multiset that splits into n classes over
/// [m], found by enumerating n-combinations (with repetition only for
/// {[m]}) of set partitions, pruning repeated proper masks, subset
/// criterion violations, and partial combos that already resolve in more
/// than one way. exhausted = true certifies the value.
[[nodiscard]] ExactResult g_exact_search(int n, int m, const SearchBudget& budget = {});

/// Largest N such that N classes of exactly k components each form a
/// uniquely resolvable multiset over [m]; same search scheme over the
/// k-block partitions. Requires 2 <= k <= m.
[[nodiscard]] ExactResult p_k_search(int k, int m, const SearchBudget& budget = {});

} // namespace urm::oracle
