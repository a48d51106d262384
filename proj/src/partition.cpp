#include "urm/partition.hpp"

#include <algorithm>
#include <set>

namespace urm {

std::vector<int> CanonicalPartition::class_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(classes.size());
    for (const auto& cls : classes) sizes.push_back(static_cast<int>(cls.size()));
    return sizes;
}

std::string CanonicalPartition::to_string() const {
    std::string s = "{ ";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i > 0) s += " | ";
        for (std::size_t j = 0; j < classes[i].size(); ++j) {
            if (j > 0) s += " ";
            s += mask_to_string(classes[i][j]);
        }
    }
    return s + " }";
}

namespace {

void check_index_cover(const Multiset& ms, const Partition& p) {
    std::vector<char> seen(ms.size(), 0);
    for (const auto& cls : p.classes) {
        for (int idx : cls) {
            if (idx < 0 || static_cast<std::size_t>(idx) >= ms.size())
                throw malformed_input_error("component index " + std::to_string(idx) + " out of range");
            if (seen[static_cast<std::size_t>(idx)])
                throw malformed_input_error("component index " + std::to_string(idx) +
                                            " appears in more than one class");
            seen[static_cast<std::size_t>(idx)] = 1;
        }
    }
}

} // namespace

bool is_valid_partition(const Multiset& ms, const Partition& p) {
    check_index_cover(ms, p);
    std::size_t covered = 0;
    for (const auto& cls : p.classes) {
        if (cls.empty()) return false;
        mask_t acc = 0;
        for (int idx : cls) {
            mask_t bits = ms.component(static_cast<std::size_t>(idx)).bits();
            if ((acc & bits) != 0) return false;
            acc |= bits;
        }
        if (acc != SubsetMask::full_bits(ms.ground_size())) return false;
        covered += cls.size();
    }
    return covered == ms.size();
}

CanonicalPartition canonicalize(const Multiset& ms, const Partition& p) {
    if (!is_valid_partition(ms, p))
        throw malformed_input_error("cannot canonicalize: not a partition into exact covers");
    CanonicalPartition out;
    out.classes.reserve(p.classes.size());
    for (const auto& cls : p.classes) {
        std::vector<mask_t> masks;
        masks.reserve(cls.size());
        for (int idx : cls) masks.push_back(ms.component(static_cast<std::size_t>(idx)).bits());
        std::sort(masks.begin(), masks.end());
        out.classes.push_back(std::move(masks));
    }
    std::sort(out.classes.begin(), out.classes.end());
    return out;
}

bool subset_criterion(const std::vector<int>& class_sizes, int m) {
    check_ground_size(m);
    const std::uint64_t budget = (std::uint64_t{1} << m) - 2;
    std::uint64_t sum = 0;
    for (int d : class_sizes) {
        if (d < 1) throw malformed_input_error("class size must be at least 1, got " + std::to_string(d));
        if (d > m) return false; // its term alone exceeds 2^m - 2
        sum += (std::uint64_t{1} << d) - 2;
        if (sum > budget) return false;
    }
    return true;
}

std::vector<SubsetMask> induced_proper_subsets(const Multiset& ms, const std::vector<int>& class_indices) {
    std::vector<mask_t> masks;
    masks.reserve(class_indices.size());
    mask_t acc = 0;
    for (int idx : class_indices) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= ms.size())
            throw malformed_input_error("component index " + std::to_string(idx) + " out of range");
        mask_t bits = ms.component(static_cast<std::size_t>(idx)).bits();
        if ((acc & bits) != 0) throw malformed_input_error("class components overlap");
        acc |= bits;
        masks.push_back(bits);
    }
    const std::size_t d = masks.size();
    std::set<mask_t> unions;
    for (std::uint64_t pick = 1; pick + 1 < (std::uint64_t{1} << d); ++pick) {
        mask_t u = 0;
        for (std::size_t i = 0; i < d; ++i)
            if ((pick >> i) & 1) u |= masks[i];
        unions.insert(u);
    }
    std::vector<SubsetMask> out;
    out.reserve(unions.size());
    for (mask_t u : unions) out.push_back(SubsetMask::from_bits(ms.ground_size(), u));
    return out;
}

} // namespace urm
