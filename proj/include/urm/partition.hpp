#pragma once

// Partitions of a multiset's index set into classes, and the canonical
// (order-free) form used to compare resolutions.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "urm/multiset.hpp"

namespace urm {

/// Classes of 0-based component indices. Class order and in-class order
/// carry no meaning; canonicalize() removes both.
struct Partition {
    std::vector<std::vector<int>> classes;

    [[nodiscard]] std::size_t class_count() const { return classes.size(); }
};

/// Order-free form of a partition: per class the sorted masks, classes
/// sorted lexicographically. Two partitions resolve a multiset the same
/// way exactly when their canonical forms are equal.
struct CanonicalPartition {
    std::vector<std::vector<mask_t>> classes;

    [[nodiscard]] std::vector<int> class_sizes() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const CanonicalPartition&, const CanonicalPartition&) = default;
    friend auto operator<=>(const CanonicalPartition& a, const CanonicalPartition& b) {
        return a.classes <=> b.classes;
    }
};

/// Checks that p's classes cover every component index exactly once and
/// every class is an exact cover of [m] (pairwise disjoint, union [m]).
/// Out-of-range or repeated indices throw; property failures return false.
[[nodiscard]] bool is_valid_partition(const Multiset& ms, const Partition& p);

/// Canonical form of a valid partition; throws when p is not valid for ms.
[[nodiscard]] CanonicalPartition canonicalize(const Multiset& ms, const Partition& p);

/// The packing inequality every uniquely resolvable multiset satisfies:
/// sum over classes of (2^{d_i} - 2) <= 2^m - 2 for class sizes d_i.
[[nodiscard]] bool subset_criterion(const std::vector<int>& class_sizes, int m);

/// Unions of the non-empty proper sub-collections of one class, the full
/// union excluded. Components must be pairwise disjoint.
[[nodiscard]] std::vector<SubsetMask> induced_proper_subsets(const Multiset& ms,
                                                             const std::vector<int>& class_indices);

} // namespace urm
