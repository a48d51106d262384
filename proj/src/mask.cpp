#include "urm/mask.hpp"

#include <algorithm>
#include <cstdlib>

namespace urm {

int max_ground_size() {
    static const int cap = [] {
        int m = kMaxGroundSetSize;
        if (const char* env = std::getenv("URM_MAX_M")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1 && v < m) m = static_cast<int>(v);
        }
        return m;
    }();
    return cap;
}

void check_ground_size(int m) {
    if (m < 1) throw malformed_input_error("ground set size must be at least 1, got " + std::to_string(m));
    if (m > max_ground_size())
        throw capacity_error("ground set size " + std::to_string(m) + " exceeds cap " +
                             std::to_string(max_ground_size()));
}

SubsetMask SubsetMask::from_bits(int m, mask_t bits) {
    check_ground_size(m);
    if ((bits & ~full_bits(m)) != 0)
        throw malformed_input_error("mask has bits outside [1," + std::to_string(m) + "]");
    return SubsetMask(m, bits);
}

SubsetMask SubsetMask::from_elements(int m, const std::vector<int>& elements) {
    check_ground_size(m);
    mask_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > m)
            throw malformed_input_error("element " + std::to_string(e) + " outside [1," + std::to_string(m) + "]");
        bits |= mask_t{1} << (e - 1);
    }
    return SubsetMask(m, bits);
}

SubsetMask SubsetMask::from_elements(int m, std::initializer_list<int> elements) {
    return from_elements(m, std::vector<int>(elements));
}

SubsetMask SubsetMask::full(int m) {
    check_ground_size(m);
    return SubsetMask(m, full_bits(m));
}

bool SubsetMask::contains(int element) const {
    if (element < 1 || element > m_) return false;
    return (bits_ >> (element - 1)) & 1u;
}

SubsetMask SubsetMask::union_with(const SubsetMask& other) const {
    if (m_ != other.m_) throw malformed_input_error("union of masks over different ground sets");
    return SubsetMask(m_, bits_ | other.bits_);
}

std::vector<int> SubsetMask::elements() const { return mask_elements(bits_); }

std::string SubsetMask::to_string() const { return mask_to_string(bits_); }

std::vector<int> mask_elements(mask_t bits) {
    std::vector<int> out;
    while (bits != 0) {
        int b = std::countr_zero(bits);
        out.push_back(b + 1);
        bits &= bits - 1;
    }
    return out;
}

std::string mask_to_string(mask_t bits) {
    std::string s = "{";
    bool first = true;
    for (int e : mask_elements(bits)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

} // namespace urm
