#include "urm/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "urm/bounds.hpp"

namespace urm::constructions {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::TRIVIAL: return "TRIVIAL";
        case Provenance::THEOREM12: return "THEOREM12";
        case Provenance::PAIR: return "PAIR";
        case Provenance::CENTRAL: return "CENTRAL";
        case Provenance::MIXED: return "MIXED";
        case Provenance::SHIFT: return "SHIFT";
        case Provenance::SEARCH: return "SEARCH";
    }
    return "?";
}

Provenance provenance_from_string(const std::string& s) {
    for (Provenance p : {Provenance::TRIVIAL, Provenance::THEOREM12, Provenance::PAIR, Provenance::CENTRAL,
                         Provenance::MIXED, Provenance::SHIFT, Provenance::SEARCH})
        if (s == to_string(p)) return p;
    throw malformed_input_error("unknown provenance tag: " + s);
}

namespace {

std::uint64_t pair_budget(int m) { return (std::uint64_t{1} << (m - 1)) - 1; } // 2^{m-1} - 1

ConstructedInstance finish(std::vector<SubsetMask> comps, std::vector<std::vector<int>> classes, int n, int m,
                           std::size_t formula_size, Provenance prov) {
    ConstructedInstance inst{Multiset(m, std::move(comps)), Partition{std::move(classes)}, n, m, formula_size, prov};
    if (inst.ms.size() != formula_size)
        throw std::logic_error("construction size disagrees with its formula");
    return inst;
}

} // namespace

ConstructedInstance trivial_construction(int n, int m) {
    check_ground_size(m);
    if (n < 1) throw malformed_input_error("need n >= 1, got " + std::to_string(n));
    std::vector<SubsetMask> comps(static_cast<std::size_t>(n), SubsetMask::full(m));
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < n; ++i) classes.push_back({i});
    return finish(std::move(comps), std::move(classes), n, m, static_cast<std::size_t>(n), Provenance::TRIVIAL);
}

ConstructedInstance theorem12_construction(int m) {
    check_ground_size(m);
    std::vector<SubsetMask> comps;
    std::vector<int> singleton_class;
    for (int e = 1; e <= m; ++e) {
        comps.push_back(SubsetMask::from_elements(m, {e}));
        singleton_class.push_back(e - 1);
    }
    comps.push_back(SubsetMask::full(m));
    std::vector<std::vector<int>> classes{singleton_class, {m}};
    return finish(std::move(comps), std::move(classes), 2, m, static_cast<std::size_t>(m) + 1,
                  Provenance::THEOREM12);
}

ConstructedInstance pair_construction(int n, int m) {
    check_ground_size(m);
    if (n < 1 || static_cast<std::uint64_t>(n) > pair_budget(m))
        throw regime_error("pair construction needs 1 <= n <= 2^{m-1}-1 = " + std::to_string(pair_budget(m)) +
                           ", got n = " + std::to_string(n));
    const mask_t full = SubsetMask::full_bits(m);
    std::vector<SubsetMask> comps;
    std::vector<std::vector<int>> classes;
    int taken = 0;
    for (mask_t c = 1; c < full && taken < n; c += 2) { // bit 0 set: element 1 in C
        comps.push_back(SubsetMask::from_bits(m, c));
        comps.push_back(SubsetMask::from_bits(m, full & ~c));
        classes.push_back({2 * taken, 2 * taken + 1});
        ++taken;
    }
    return finish(std::move(comps), std::move(classes), n, m, 2 * static_cast<std::size_t>(n), Provenance::PAIR);
}

std::vector<SubsetMask> complement_free_family(int N) {
    check_ground_size(N);
    if (N < 2) throw regime_error("complement-free family needs N >= 2, got " + std::to_string(N));
    const mask_t full = SubsetMask::full_bits(N);
    const int half = N / 2;
    std::vector<SubsetMask> fam;
    for (mask_t bits = 1; bits < full; ++bits) {
        int sz = std::popcount(bits);
        bool take = (N % 2 == 1) ? sz >= (N + 1) / 2 : (sz > half || (sz == half && (bits & 1u)));
        if (take) fam.push_back(SubsetMask::from_bits(N, bits));
    }
    return fam;
}

bool central_regime_ok(int n, int m, int k) {
    if (m < 1 || m > max_ground_size()) return false;
    if (k < 2 || k >= m) return false;
    int b = m / (k - 1);
    if (b < 2) return false;
    return n >= 1 && static_cast<std::uint64_t>(n) <= (std::uint64_t{1} << (b - 1)) - 1;
}

ConstructedInstance central_construction(int n, int m, int k) {
    check_ground_size(m);
    if (k < 2 || k >= m)
        throw regime_error("central construction needs 2 <= k < m, got k = " + std::to_string(k) +
                           ", m = " + std::to_string(m));
    const int b = m / (k - 1);
    if (b < 2)
        throw regime_error("central construction needs floor(m/(k-1)) >= 2, got " + std::to_string(b));
    const std::uint64_t n_cap = (std::uint64_t{1} << (b - 1)) - 1;
    if (n < 1 || static_cast<std::uint64_t>(n) > n_cap)
        throw regime_error("central construction needs 1 <= n <= 2^{floor(m/(k-1))-1}-1 = " +
                           std::to_string(n_cap) + ", got n = " + std::to_string(n));
    const int r = m % (k - 1);
    const mask_t remainder_bits = r == 0 ? 0 : ((mask_t{1} << r) - 1) << (m - r);
    const mask_t block_full = (mask_t{1} << b) - 1;
    std::vector<SubsetMask> fam = complement_free_family(b);

    std::vector<SubsetMask> comps;
    std::vector<std::vector<int>> classes;
    for (int j = 0; j < n; ++j) {
        const mask_t x = fam[static_cast<std::size_t>(j)].bits();
        mask_t central = remainder_bits;
        for (int i = 0; i < k - 1; ++i) central |= x << (i * b);
        std::vector<int> cls;
        cls.push_back(static_cast<int>(comps.size()));
        comps.push_back(SubsetMask::from_bits(m, central));
        for (int i = 0; i < k - 1; ++i) {
            mask_t leftover = (block_full << (i * b)) & ~central;
            cls.push_back(static_cast<int>(comps.size()));
            comps.push_back(SubsetMask::from_bits(m, leftover));
        }
        classes.push_back(std::move(cls));
    }
    return finish(std::move(comps), std::move(classes), n, m,
                  static_cast<std::size_t>(k) * static_cast<std::size_t>(n), Provenance::CENTRAL);
}

bool mixed_regime_ok(int n, int m) {
    if (m < 4 || m > max_ground_size()) return false;
    std::int64_t hi = static_cast<std::int64_t>(pair_budget(m));
    std::int64_t lo = hi + 2 - (std::int64_t{1} << (m / 2)); // 2^{m-1}+1-2^{floor(m/2)}
    return n >= lo && n <= hi;
}

ConstructedInstance mixed_construction(int n, int m) {
    check_ground_size(m);
    if (!mixed_regime_ok(n, m))
        throw regime_error("mixed construction needs m >= 4 and 2^{m-1}+1-2^{floor(m/2)} <= n <= 2^{m-1}-1");
    const std::int64_t k = (static_cast<std::int64_t>(pair_budget(m)) - n) / 2;

    std::vector<SubsetMask> comps;
    std::vector<std::vector<int>> classes;
    std::set<mask_t> blocked;
    if (k > 0) {
        ConstructedInstance base = central_construction(static_cast<int>(k), m, 3);
        comps = base.ms.components();
        classes = base.partition.classes;
        for (const auto& cls : base.partition.classes)
            for (const SubsetMask& s : induced_proper_subsets(base.ms, cls)) blocked.insert(s.bits());
    }

    const mask_t full = SubsetMask::full_bits(m);
    std::int64_t pairs_needed = n - k;
    for (mask_t c = 1; c < full && pairs_needed > 0; c += 2) {
        mask_t cc = full & ~c;
        if (blocked.count(c) || blocked.count(cc)) continue;
        int base_idx = static_cast<int>(comps.size());
        comps.push_back(SubsetMask::from_bits(m, c));
        comps.push_back(SubsetMask::from_bits(m, cc));
        classes.push_back({base_idx, base_idx + 1});
        --pairs_needed;
    }
    if (pairs_needed > 0) throw std::logic_error("mixed construction ran out of complement pairs");
    return finish(std::move(comps), std::move(classes), n, m, static_cast<std::size_t>(2 * n + k),
                  Provenance::MIXED);
}

ConstructedInstance shift_construction(int n, int m) {
    check_ground_size(m);
    const std::uint64_t budget = pair_budget(m);
    if (n < 1 || static_cast<std::uint64_t>(n) <= budget)
        throw regime_error("shift construction needs n > 2^{m-1}-1 = " + std::to_string(budget) +
                           ", got n = " + std::to_string(n));
    std::vector<SubsetMask> comps;
    std::vector<std::vector<int>> classes;
    if (budget > 0) {
        ConstructedInstance pairs = pair_construction(static_cast<int>(budget), m);
        comps = pairs.ms.components();
        classes = pairs.partition.classes;
    }
    const std::uint64_t copies = static_cast<std::uint64_t>(n) - budget;
    for (std::uint64_t i = 0; i < copies; ++i) {
        classes.push_back({static_cast<int>(comps.size())});
        comps.push_back(SubsetMask::full(m));
    }
    return finish(std::move(comps), std::move(classes), n, m,
                  static_cast<std::size_t>(n + static_cast<std::int64_t>(budget)), Provenance::SHIFT);
}

std::pair<Multiset, Partition> eliminate_singletons(const Multiset& ms, const Partition& p) {
    if (!is_valid_partition(ms, p))
        throw malformed_input_error("eliminate_singletons needs a valid partition");
    const mask_t full = SubsetMask::full_bits(ms.ground_size());

    // Work on classes of masks, in component-index order within each class.
    std::vector<std::vector<mask_t>> classes;
    for (const auto& cls : p.classes) {
        std::vector<int> sorted = cls;
        std::sort(sorted.begin(), sorted.end());
        std::vector<mask_t> masks;
        for (int idx : sorted) masks.push_back(ms.component(static_cast<std::size_t>(idx)).bits());
        classes.push_back(std::move(masks));
    }

    auto first_of_size = [&](bool want_singleton) -> std::ptrdiff_t {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (want_singleton ? classes[i].size() == 1 : classes[i].size() >= 3)
                return static_cast<std::ptrdiff_t>(i);
        return -1;
    };

    if (first_of_size(true) < 0) throw regime_error("no size-1 class to eliminate");
    while (true) {
        std::ptrdiff_t a = first_of_size(true);
        if (a < 0) break;
        std::ptrdiff_t b = first_of_size(false);
        if (b < 0) throw regime_error("no class of size >= 3 left to merge");
        std::vector<mask_t>& big = classes[static_cast<std::size_t>(b)];
        const mask_t c1 = big[0];
        const mask_t c2 = big[1];
        big.erase(big.begin() + 1);
        big[0] = c1 | c2;
        classes[static_cast<std::size_t>(a)] = {c1, full & ~c1};
    }

    std::vector<SubsetMask> comps;
    std::vector<std::vector<int>> out_classes;
    for (const auto& cls : classes) {
        std::vector<int> idx;
        for (mask_t bits : cls) {
            idx.push_back(static_cast<int>(comps.size()));
            comps.push_back(SubsetMask::from_bits(ms.ground_size(), bits));
        }
        out_classes.push_back(std::move(idx));
    }
    return {Multiset(ms.ground_size(), std::move(comps)), Partition{std::move(out_classes)}};
}

ConstructedInstance best_construction(int n, int m) {
    check_ground_size(m);
    if (n < 1) throw malformed_input_error("need n >= 1, got " + std::to_string(n));
    std::vector<ConstructedInstance> candidates;
    if (n == 2) candidates.push_back(theorem12_construction(m));
    if (mixed_regime_ok(n, m)) candidates.push_back(mixed_construction(n, m));
    if (static_cast<std::uint64_t>(n) > pair_budget(m)) candidates.push_back(shift_construction(n, m));
    if (static_cast<std::uint64_t>(n) <= pair_budget(m)) {
        int kt = bounds::theorem23_k(n, m);
        if (kt >= 3 && central_regime_ok(n, m, kt))
            candidates.push_back(central_construction(n, m, kt));
        else
            candidates.push_back(pair_construction(n, m));
    }
    candidates.push_back(trivial_construction(n, m));

    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (candidates[i].claimed_size > candidates[best].claimed_size) best = i;
    return candidates[best];
}

} // namespace urm::constructions
