#pragma once

// A multiset of non-empty subsets of [m]; the object the whole library
// revolves around. Components keep their construction order and are
// addressed by 0-based index.

#include <cstddef>
#include <vector>

#include "urm/mask.hpp"

namespace urm {

class Multiset {
public:
    Multiset(int m, std::vector<SubsetMask> components);

    /// Convenience: components given as 1-based element lists.
    static Multiset from_lists(int m, const std::vector<std::vector<int>>& components);

    [[nodiscard]] int ground_size() const { return m_; }
    [[nodiscard]] std::size_t size() const { return components_.size(); }
    [[nodiscard]] const SubsetMask& component(std::size_t i) const { return components_.at(i); }
    [[nodiscard]] const std::vector<SubsetMask>& components() const { return components_; }
    [[nodiscard]] std::vector<mask_t> raw_masks() const;

    /// Multiplicity of each element 1..m across all components.
    [[nodiscard]] std::vector<int> element_multiplicities() const;

    /// True when some mask other than [m] occurs more than once. Such a
    /// multiset is never counted by the exact-search oracle (only the full
    /// set may repeat in a uniquely resolvable multiset).
    [[nodiscard]] bool has_repeated_proper_mask() const;

    friend bool operator==(const Multiset&, const Multiset&) = default;

private:
    int m_;
    std::vector<SubsetMask> components_;
};

/// True when every element of [m] has multiplicity exactly n.
[[nodiscard]] bool balance_check(const Multiset& ms, int n);

} // namespace urm
