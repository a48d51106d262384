#pragma once

// Backtracking engine that enumerates the ways a multiset splits into n
// exact covers of [m]. Uniqueness of that split is what the rest of the
// library constructs, bounds and searches for.

#include <cstdint>
#include <vector>

#include "urm/partition.hpp"

namespace urm {

enum class ResolutionStatus { UNRESOLVABLE, UNIQUE, MULTIPLE };

[[nodiscard]] const char* to_string(ResolutionStatus s);

struct ResolutionReport {
    ResolutionStatus status = ResolutionStatus::UNRESOLVABLE;
    /// Distinct canonical partitions, at most two, in canonical order.
    std::vector<CanonicalPartition> witnesses;
    std::uint64_t nodes_explored = 0;
};

/// Raw engine output: every distinct canonical partition found before the
/// limit was reached, in canonical (sorted) order.
struct ResolutionSet {
    std::vector<CanonicalPartition> found;
    std::uint64_t nodes = 0;
    bool hit_limit = false;
};

/// Enumerates partitions of the component index set into exact covers of
/// [m]; under the balance precondition every complete partition has
/// exactly n classes. Search order: each class anchors the lowest
/// unassigned index, grows by covering the lowest uncovered element, and
/// candidates are tried in increasing index order with equal-mask siblings
/// tried once. Halts as soon as `limit` distinct canonical forms exist.
[[nodiscard]] ResolutionSet collect_resolutions(const Multiset& ms, int n, std::size_t limit);

/// Status plus at most two witnesses. With limit >= 2 the status is exact:
/// UNIQUE means exactly one canonical partition into n classes exists.
/// limit = 1 stops at the first witness and cannot rule out MULTIPLE.
[[nodiscard]] ResolutionReport enumerate_resolutions(const Multiset& ms, int n, std::size_t limit = 2);

[[nodiscard]] bool is_uniquely_resolvable(const Multiset& ms, int n);

} // namespace urm
