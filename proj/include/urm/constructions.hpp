#pragma once

// Explicit families of uniquely resolvable multisets, each carrying the
// partition that certifies its size.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "urm/partition.hpp"

namespace urm::constructions {

enum class Provenance { TRIVIAL, THEOREM12, PAIR, CENTRAL, MIXED, SHIFT, SEARCH };

[[nodiscard]] const char* to_string(Provenance p);
[[nodiscard]] Provenance provenance_from_string(const std::string& s);

struct ConstructedInstance {
    Multiset ms;
    Partition partition;
    int n;
    int m;
    std::size_t claimed_size;
    Provenance provenance;
};

/// n copies of [m], one per class. Size n.
[[nodiscard]] ConstructedInstance trivial_construction(int n, int m);

/// The m singletons plus [m] itself; the largest family for two classes.
/// Size m + 1.
[[nodiscard]] ConstructedInstance theorem12_construction(int m);

/// n complement pairs {C, [m]\C}. C runs over masks containing element 1,
/// other than [m], in increasing bit-pattern order. Requires
/// n <= 2^{m-1} - 1. Size 2n.
[[nodiscard]] ConstructedInstance pair_construction(int n, int m);

/// 2^{N-1} - 1 proper subsets of [N], pairwise non-complementary, each of
/// size >= ceil(N/2); for even N ties at size N/2 go to the set containing
/// element 1. Increasing bit-pattern order.
[[nodiscard]] std::vector<SubsetMask> complement_free_family(int N);

/// k-component classes over k-1 consecutive blocks of size floor(m/(k-1)):
/// class j takes the j-th complement-free-family member inside every block
/// as its central component (remainder elements join it) and the block
/// leftovers as the rest. Requires 2 <= k < m, floor(m/(k-1)) >= 2 and
/// n <= 2^{floor(m/(k-1))-1} - 1. Size kn.
[[nodiscard]] ConstructedInstance central_construction(int n, int m, int k);

/// k = floor((2^{m-1}-1-n)/2) three-component classes from
/// central_construction(k, m, 3) plus n-k complement pairs that avoid the
/// subsets those classes induce. Requires m >= 4 and
/// 2^{m-1}+1-2^{floor(m/2)} <= n <= 2^{m-1}-1. Size 2n + k.
[[nodiscard]] ConstructedInstance mixed_construction(int n, int m);

/// All 2^{m-1} - 1 complement pairs plus n - (2^{m-1}-1) copies of [m].
/// Requires n > 2^{m-1} - 1. Size n + 2^{m-1} - 1.
[[nodiscard]] ConstructedInstance shift_construction(int n, int m);

/// Repeatedly rewrites a uniquely resolvable multiset to remove size-1
/// classes: the lowest-indexed size->=3 class merges its two lowest
/// components, and a size-1 class's [m] splits into the merged class's
/// first component and its complement. Preserves size and uniqueness.
[[nodiscard]] std::pair<Multiset, Partition> eliminate_singletons(const Multiset& ms, const Partition& p);

/// Largest instance among the constructions applicable at (n, m).
[[nodiscard]] ConstructedInstance best_construction(int n, int m);

/// True when central_construction(n, m, k)'s parameter regime holds.
[[nodiscard]] bool central_regime_ok(int n, int m, int k);

/// True when mixed_construction(n, m)'s parameter regime holds.
[[nodiscard]] bool mixed_regime_ok(int n, int m);

} // namespace urm::constructions
