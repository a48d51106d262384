#pragma once

// Subsets of a ground set [m] = {1,...,m} packed into machine words.
// Element e is bit e-1.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "urm/errors.hpp"

namespace urm {

using mask_t = std::uint32_t;

/// Hard cap on the ground set size; URM_MAX_M may lower it, never raise it.
inline constexpr int kMaxGroundSetSize = 24;

/// Effective cap: min(kMaxGroundSetSize, $URM_MAX_M). Read once per process.
int max_ground_size();

/// A subset of [m], value type. May be empty; multisets reject empty components.
class SubsetMask {
public:
    SubsetMask() = default;

    static SubsetMask from_bits(int m, mask_t bits);
    static SubsetMask from_elements(int m, const std::vector<int>& elements);
    static SubsetMask from_elements(int m, std::initializer_list<int> elements);
    static SubsetMask full(int m);

    [[nodiscard]] mask_t bits() const { return bits_; }
    [[nodiscard]] int ground_size() const { return m_; }
    [[nodiscard]] bool empty() const { return bits_ == 0; }
    [[nodiscard]] int count() const { return std::popcount(bits_); }
    [[nodiscard]] bool is_full() const { return bits_ == full_bits(m_); }
    [[nodiscard]] bool contains(int element) const;
    [[nodiscard]] bool disjoint_with(const SubsetMask& other) const { return (bits_ & other.bits_) == 0; }
    [[nodiscard]] bool subset_of(const SubsetMask& other) const { return (bits_ & ~other.bits_) == 0; }

    [[nodiscard]] SubsetMask complement() const { return SubsetMask(m_, full_bits(m_) & ~bits_); }
    [[nodiscard]] SubsetMask union_with(const SubsetMask& other) const;

    /// Elements in increasing order, 1-based.
    [[nodiscard]] std::vector<int> elements() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
    friend std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) {
        if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
        return a.m_ <=> b.m_;
    }

    static constexpr mask_t full_bits(int m) { return m >= 32 ? ~mask_t{0} : (mask_t{1} << m) - 1; }

private:
    SubsetMask(int m, mask_t bits) : m_(m), bits_(bits) {}

    int m_ = 0;
    mask_t bits_ = 0;
};

/// Validates 1 <= m <= max_ground_size(); malformed below, capacity above.
void check_ground_size(int m);

/// Lowest element of [m] not covered by bits, or 0 when bits covers [m].
inline int lowest_missing_element(mask_t bits, int m) {
    mask_t rest = SubsetMask::full_bits(m) & ~bits;
    return rest == 0 ? 0 : std::countr_zero(rest) + 1;
}

std::string mask_to_string(mask_t bits);
std::vector<int> mask_elements(mask_t bits);

} // namespace urm
