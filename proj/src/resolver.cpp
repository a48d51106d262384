#include "urm/resolver.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace urm {

const char* to_string(ResolutionStatus s) {
    switch (s) {
        case ResolutionStatus::UNRESOLVABLE: return "UNRESOLVABLE";
        case ResolutionStatus::UNIQUE: return "UNIQUE";
        case ResolutionStatus::MULTIPLE: return "MULTIPLE";
    }
    return "?";
}

namespace {

constexpr std::size_t kMaxComponents = 64;

class Engine {
public:
    Engine(const Multiset& ms, int n, std::size_t limit)
        : masks_(ms.raw_masks()),
          full_(SubsetMask::full_bits(ms.ground_size())),
          n_(static_cast<std::size_t>(n)),
          limit_(limit) {
        unassigned_ = masks_.size() == kMaxComponents ? ~std::uint64_t{0}
                                                      : (std::uint64_t{1} << masks_.size()) - 1;
        for (mask_t mb : masks_)
            if (mb == full_) ++full_masks_left_;
    }

    ResolutionSet run() {
        start_next_class();
        ResolutionSet out;
        out.found.assign(found_.begin(), found_.end());
        out.nodes = nodes_;
        out.hit_limit = stop_;
        return out;
    }

private:
    // Any completion splits the unassigned components into exactly the
    // remaining number of classes; a full-set mask always sits alone and
    // every other class takes at least two components.
    bool feasible() const {
        std::uint64_t r = n_ - classes_.size();
        std::uint64_t rem = static_cast<std::uint64_t>(std::popcount(unassigned_));
        std::uint64_t f = static_cast<std::uint64_t>(full_masks_left_);
        std::uint64_t lo = f + (rem > f ? 1 : 0);
        std::uint64_t hi = f + (rem - f) / 2;
        return lo <= r && r <= hi;
    }

    void start_next_class() {
        ++nodes_;
        if (unassigned_ == 0) {
            record();
            return;
        }
        if (classes_.size() == n_ || !feasible()) return;
        int j0 = std::countr_zero(unassigned_);
        assign(j0);
        current_.push_back(j0);
        mask_t saved = cur_union_;
        cur_union_ = masks_[static_cast<std::size_t>(j0)];
        extend_class();
        cur_union_ = saved;
        current_.pop_back();
        unassign(j0);
    }

    void extend_class() {
        ++nodes_;
        if (stop_) return;
        if (cur_union_ == full_) {
            classes_.push_back(current_);
            std::vector<int> saved;
            saved.swap(current_);
            mask_t saved_union = cur_union_;
            cur_union_ = 0;
            start_next_class();
            cur_union_ = saved_union;
            current_.swap(saved);
            classes_.pop_back();
            return;
        }
        int target_bit = std::countr_zero(~cur_union_ & full_);
        std::vector<mask_t> tried;
        for (std::uint64_t rest = unassigned_; rest != 0 && !stop_; rest &= rest - 1) {
            int j = std::countr_zero(rest);
            mask_t mb = masks_[static_cast<std::size_t>(j)];
            if (((mb >> target_bit) & 1u) == 0) continue;
            if ((mb & cur_union_) != 0) continue;
            if (std::find(tried.begin(), tried.end(), mb) != tried.end()) continue;
            tried.push_back(mb);
            assign(j);
            current_.push_back(j);
            cur_union_ |= mb;
            extend_class();
            cur_union_ &= ~mb;
            current_.pop_back();
            unassign(j);
        }
    }

    void record() {
        CanonicalPartition cp;
        cp.classes.reserve(classes_.size());
        for (const auto& cls : classes_) {
            std::vector<mask_t> ms;
            ms.reserve(cls.size());
            for (int idx : cls) ms.push_back(masks_[static_cast<std::size_t>(idx)]);
            std::sort(ms.begin(), ms.end());
            cp.classes.push_back(std::move(ms));
        }
        std::sort(cp.classes.begin(), cp.classes.end());
        auto [it, inserted] = found_.insert(std::move(cp));
        (void)it;
        if (inserted && found_.size() >= limit_) stop_ = true;
    }

    void assign(int j) {
        unassigned_ &= ~(std::uint64_t{1} << j);
        if (masks_[static_cast<std::size_t>(j)] == full_) --full_masks_left_;
    }
    void unassign(int j) {
        unassigned_ |= std::uint64_t{1} << j;
        if (masks_[static_cast<std::size_t>(j)] == full_) ++full_masks_left_;
    }

    std::vector<mask_t> masks_;
    mask_t full_;
    std::size_t n_;
    std::size_t limit_;
    std::uint64_t unassigned_ = 0;
    int full_masks_left_ = 0;
    std::vector<std::vector<int>> classes_;
    std::vector<int> current_;
    mask_t cur_union_ = 0;
    std::set<CanonicalPartition> found_;
    std::uint64_t nodes_ = 0;
    bool stop_ = false;
};

} // namespace

ResolutionSet collect_resolutions(const Multiset& ms, int n, std::size_t limit) {
    if (n < 1) throw malformed_input_error("class count must be at least 1, got " + std::to_string(n));
    if (limit < 1) throw malformed_input_error("limit must be at least 1");
    if (ms.size() > kMaxComponents)
        throw capacity_error("multiset has " + std::to_string(ms.size()) + " components, cap is " +
                             std::to_string(kMaxComponents));
    if (!balance_check(ms, n)) return ResolutionSet{};
    return Engine(ms, n, limit).run();
}

ResolutionReport enumerate_resolutions(const Multiset& ms, int n, std::size_t limit) {
    ResolutionSet rs = collect_resolutions(ms, n, limit);
    ResolutionReport report;
    report.nodes_explored = rs.nodes;
    if (rs.found.empty()) {
        report.status = ResolutionStatus::UNRESOLVABLE;
    } else if (rs.found.size() == 1) {
        report.status = ResolutionStatus::UNIQUE;
    } else {
        report.status = ResolutionStatus::MULTIPLE;
    }
    std::size_t take = std::min<std::size_t>(2, rs.found.size());
    report.witnesses.assign(rs.found.begin(), rs.found.begin() + static_cast<std::ptrdiff_t>(take));
    return report;
}

bool is_uniquely_resolvable(const Multiset& ms, int n) {
    return enumerate_resolutions(ms, n, 2).status == ResolutionStatus::UNIQUE;
}

} // namespace urm
