#include "urm/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace urm::oracle {

namespace {

constexpr int kMaxSetPartitionGround = 6;
constexpr std::size_t kMaxNaiveComponents = 14;

} // namespace

std::vector<std::vector<SubsetMask>> set_partitions(int m) {
    check_ground_size(m);
    if (m > kMaxSetPartitionGround)
        throw capacity_error("set partition enumeration capped at m = " +
                             std::to_string(kMaxSetPartitionGround) + ", got " + std::to_string(m));
    std::vector<std::vector<SubsetMask>> out;
    std::vector<int> rgs(static_cast<std::size_t>(m), 0);

    auto emit = [&] {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<mask_t> bits(static_cast<std::size_t>(blocks), 0);
        for (int i = 0; i < m; ++i) bits[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])] |= mask_t{1} << i;
        std::vector<SubsetMask> part;
        part.reserve(bits.size());
        for (mask_t b : bits) part.push_back(SubsetMask::from_bits(m, b));
        out.push_back(std::move(part));
    };

    // lexicographic restricted growth strings: digit i may not exceed
    // max(prefix) + 1
    auto rec = [&](auto&& self, int i, int prefix_max) -> void {
        if (i == m) {
            emit();
            return;
        }
        for (int v = 0; v <= prefix_max + 1; ++v) {
            rgs[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, std::max(prefix_max, v));
        }
    };
    rec(rec, 1, 0); // rgs[0] = 0 fixed
    return out;
}

namespace {

class NaiveEngine {
public:
    NaiveEngine(const Multiset& ms, int n, std::size_t limit)
        : masks_(ms.raw_masks()), full_(SubsetMask::full_bits(ms.ground_size())), n_(n), limit_(limit) {}

    ResolutionSet run() {
        assign(0);
        ResolutionSet out;
        out.found.assign(found_.begin(), found_.end());
        out.nodes = nodes_;
        out.hit_limit = stop_;
        return out;
    }

private:
    void assign(std::size_t i) {
        ++nodes_;
        if (stop_) return;
        if (i == masks_.size()) {
            finish();
            return;
        }
        const mask_t mb = masks_[i];
        for (std::size_t c = 0; c < unions_.size() && !stop_; ++c) {
            if ((unions_[c] & mb) != 0) continue;
            unions_[c] |= mb;
            members_[c].push_back(static_cast<int>(i));
            assign(i + 1);
            members_[c].pop_back();
            unions_[c] &= ~mb;
        }
        if (!stop_ && unions_.size() < static_cast<std::size_t>(n_)) {
            unions_.push_back(mb);
            members_.push_back({static_cast<int>(i)});
            assign(i + 1);
            members_.pop_back();
            unions_.pop_back();
        }
    }

    void finish() {
        if (unions_.size() != static_cast<std::size_t>(n_)) return;
        for (mask_t u : unions_)
            if (u != full_) return;
        CanonicalPartition cp;
        for (const auto& cls : members_) {
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

    std::vector<mask_t> masks_;
    mask_t full_;
    int n_;
    std::size_t limit_;
    std::vector<mask_t> unions_;
    std::vector<std::vector<int>> members_;
    std::set<CanonicalPartition> found_;
    std::uint64_t nodes_ = 0;
    bool stop_ = false;
};

} // namespace

ResolutionSet naive_collect(const Multiset& ms, int n, std::size_t limit) {
    if (n < 1) throw malformed_input_error("class count must be at least 1, got " + std::to_string(n));
    if (limit < 1) throw malformed_input_error("limit must be at least 1");
    if (ms.size() > kMaxNaiveComponents)
        throw capacity_error("reference resolver capped at " + std::to_string(kMaxNaiveComponents) +
                             " components, got " + std::to_string(ms.size()));
    return NaiveEngine(ms, n, limit).run();
}

ResolutionReport naive_resolve(const Multiset& ms, int n) {
    ResolutionSet rs = naive_collect(ms, n, std::numeric_limits<std::size_t>::max());
    ResolutionReport report;
    report.nodes_explored = rs.nodes;
    report.status = rs.found.empty()      ? ResolutionStatus::UNRESOLVABLE
                    : rs.found.size() == 1 ? ResolutionStatus::UNIQUE
                                           : ResolutionStatus::MULTIPLE;
    std::size_t take = std::min<std::size_t>(2, rs.found.size());
    report.witnesses.assign(rs.found.begin(), rs.found.begin() + static_cast<std::ptrdiff_t>(take));
    return report;
}

namespace {

struct PartInfo {
    std::vector<mask_t> comps;
    std::uint64_t comp_bits = 0; // bit c set when mask value c is a component
    int blocks = 0;
    std::uint64_t criterion_term = 0; // 2^blocks - 2
};

class ExactSearch {
public:
    ExactSearch(int n, int m, const SearchBudget& budget, std::vector<PartInfo> parts, bool fixed_class_count,
                bool allow_repeat_first)
        : n_(n), m_(m), budget_(budget), parts_(std::move(parts)), fixed_class_count_(fixed_class_count),
          allow_repeat_first_(allow_repeat_first), deadline_(std::chrono::steady_clock::now() + budget.time_cap) {}

    ExactResult run() {
        ExactResult out;
        exhausted_ = true;
        descend(0, 0);
        out.value = fixed_class_count_ ? best_size_ : best_classes_;
        out.witness = std::move(best_witness_);
        out.exhausted = exhausted_ && !stopped_;
        out.candidates_examined = candidates_;
        out.nodes = nodes_;
        return out;
    }

private:
    bool out_of_budget() {
        if (stopped_) return true;
        if (candidates_ >= budget_.max_candidates || nodes_ >= budget_.max_nodes ||
            std::chrono::steady_clock::now() >= deadline_ ||
            (budget_.cancel && budget_.cancel->load(std::memory_order_relaxed))) {
            stopped_ = true;
            exhausted_ = false;
        }
        return stopped_;
    }

    // chosen classes live in comps_/classes_; uniqueness of every prefix
    // already verified, which is what keeps the tree small: a combo that
    // resolves two ways stays that way under any extension
    void descend(std::size_t start, int chosen) {
        if (fixed_class_count_ && chosen == n_) return;
        for (std::size_t i = start; i < parts_.size(); ++i) {
            if (out_of_budget()) return;
            const PartInfo& part = parts_[i];
            if ((used_ & part.comp_bits) != 0) continue; // a proper mask would repeat
            if (criterion_sum_ + part.criterion_term > criterion_budget()) continue;
            if (fixed_class_count_) {
                int slots_left = n_ - chosen - 1;
                std::int64_t reachable = static_cast<std::int64_t>(comps_.size() + part.comps.size()) +
                                         static_cast<std::int64_t>(slots_left) * m_;
                if (reachable <= best_size_) continue; // cannot beat the incumbent
            }
            push(part);
            if (unique_so_far(chosen + 1)) {
                const bool candidate = !fixed_class_count_ || chosen + 1 == n_;
                if (candidate && static_cast<std::int64_t>(comps_.size()) > best_size_) {
                    best_size_ = static_cast<std::int64_t>(comps_.size());
                    best_classes_ = chosen + 1;
                    best_witness_ = make_witness(chosen + 1);
                }
                descend(i == 0 && allow_repeat_first_ ? 0 : i + 1, chosen + 1);
            }
            pop(part);
            if (stopped_) return;
        }
    }

    std::uint64_t criterion_budget() const { return (std::uint64_t{1} << m_) - 2; }

    bool unique_so_far(int chosen) {
        ++candidates_;
        Multiset ms = make_multiset();
        ResolutionSet rs = naive_collect(ms, chosen, 2);
        nodes_ += static_cast<std::int64_t>(rs.nodes);
        return rs.found.size() == 1;
    }

    Multiset make_multiset() const {
        std::vector<SubsetMask> cs;
        cs.reserve(comps_.size());
        for (mask_t b : comps_) cs.push_back(SubsetMask::from_bits(m_, b));
        return Multiset(m_, std::move(cs));
    }

    constructions::ConstructedInstance make_witness(int chosen) const {
        Multiset ms = make_multiset();
        Partition p{classes_};
        return constructions::ConstructedInstance{std::move(ms), std::move(p), chosen, m_, comps_.size(),
                                                  constructions::Provenance::SEARCH};
    }

    void push(const PartInfo& part) {
        std::vector<int> cls;
        for (mask_t b : part.comps) {
            cls.push_back(static_cast<int>(comps_.size()));
            comps_.push_back(b);
        }
        classes_.push_back(std::move(cls));
        used_ |= part.comp_bits;
        criterion_sum_ += part.criterion_term;
    }

    void pop(const PartInfo& part) {
        criterion_sum_ -= part.criterion_term;
        used_ &= ~part.comp_bits;
        comps_.resize(comps_.size() - part.comps.size());
        classes_.pop_back();
    }

    int n_;
    int m_;
    SearchBudget budget_;
    std::vector<PartInfo> parts_;
    bool fixed_class_count_;
    bool allow_repeat_first_;
    std::chrono::steady_clock::time_point deadline_;

    std::vector<mask_t> comps_;
    std::vector<std::vector<int>> classes_;
    std::uint64_t used_ = 0;
    std::uint64_t criterion_sum_ = 0;
    std::int64_t best_size_ = 0;
    std::int64_t best_classes_ = 0;
    std::optional<constructions::ConstructedInstance> best_witness_;
    std::int64_t candidates_ = 0;
    std::int64_t nodes_ = 0;
    bool stopped_ = false;
    bool exhausted_ = true;
};

PartInfo part_info(const std::vector<SubsetMask>& part, int m) {
    PartInfo info;
    info.blocks = static_cast<int>(part.size());
    info.criterion_term = (std::uint64_t{1} << part.size()) - 2;
    const mask_t full = SubsetMask::full_bits(m);
    for (const SubsetMask& s : part) {
        info.comps.push_back(s.bits());
        if (s.bits() != full) info.comp_bits |= std::uint64_t{1} << s.bits();
    }
    return info;
}

} // namespace

ExactResult g_exact_search(int n, int m, const SearchBudget& budget) {
    if (n < 1) throw malformed_input_error("need n >= 1, got " + std::to_string(n));
    std::vector<std::vector<SubsetMask>> parts = set_partitions(m);
    std::vector<PartInfo> infos;
    infos.reserve(parts.size());
    for (const auto& p : parts) infos.push_back(part_info(p, m));
    // restricted growth order puts {[m]} first; it is the one class allowed
    // to repeat, and the only one whose comp_bits is empty
    ExactSearch search(n, m, budget, std::move(infos), /*fixed_class_count=*/true,
                       /*allow_repeat_first=*/true);
    return search.run();
}

ExactResult p_k_search(int k, int m, const SearchBudget& budget) {
    check_ground_size(m);
    if (k < 2 || k > m)
        throw regime_error("class size search needs 2 <= k <= m, got k = " + std::to_string(k));
    std::vector<PartInfo> infos;
    for (const auto& p : set_partitions(m))
        if (static_cast<int>(p.size()) == k) infos.push_back(part_info(p, m));
    ExactSearch search(/*n=*/static_cast<int>(infos.size()), m, budget, std::move(infos),
                       /*fixed_class_count=*/false, /*allow_repeat_first=*/false);
    return search.run();
}

} // namespace urm::oracle
