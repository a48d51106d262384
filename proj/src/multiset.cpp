#include "urm/multiset.hpp"

#include <algorithm>

namespace urm {

Multiset::Multiset(int m, std::vector<SubsetMask> components) : m_(m), components_(std::move(components)) {
    check_ground_size(m_);
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const SubsetMask& c = components_[i];
        if (c.ground_size() != m_)
            throw malformed_input_error("component " + std::to_string(i) + " built over a different ground set");
        if (c.empty())
            throw malformed_input_error("component " + std::to_string(i) + " is empty");
    }
}

Multiset Multiset::from_lists(int m, const std::vector<std::vector<int>>& components) {
    std::vector<SubsetMask> masks;
    masks.reserve(components.size());
    for (const auto& c : components) masks.push_back(SubsetMask::from_elements(m, c));
    return Multiset(m, std::move(masks));
}

std::vector<mask_t> Multiset::raw_masks() const {
    std::vector<mask_t> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.bits());
    return out;
}

std::vector<int> Multiset::element_multiplicities() const {
    std::vector<int> mult(static_cast<std::size_t>(m_), 0);
    for (const auto& c : components_)
        for (int e : c.elements()) mult[static_cast<std::size_t>(e - 1)]++;
    return mult;
}

bool Multiset::has_repeated_proper_mask() const {
    std::vector<mask_t> masks = raw_masks();
    std::sort(masks.begin(), masks.end());
    const mask_t full = SubsetMask::full_bits(m_);
    for (std::size_t i = 1; i < masks.size(); ++i)
        if (masks[i] == masks[i - 1] && masks[i] != full) return true;
    return false;
}

bool balance_check(const Multiset& ms, int n) {
    if (n < 0) return false;
    for (int mult : ms.element_multiplicities())
        if (mult != n) return false;
    return true;
}

} // namespace urm
