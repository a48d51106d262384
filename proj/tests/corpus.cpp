#include "corpus.hpp"

#include <random>
#include <string>

#include "urm/io.hpp"

namespace urm::testing {

namespace {

Multiset random_balanced(std::mt19937_64& gen, int n, int m) {
    std::vector<SubsetMask> comps;
    for (int cls = 0; cls < n; ++cls) {
        std::vector<int> rgs(static_cast<std::size_t>(m), 0);
        int prefix_max = 0;
        for (int i = 1; i < m; ++i) {
            rgs[static_cast<std::size_t>(i)] = static_cast<int>(gen() % static_cast<std::uint64_t>(prefix_max + 2));
            prefix_max = std::max(prefix_max, rgs[static_cast<std::size_t>(i)]);
        }
        std::vector<mask_t> blocks(static_cast<std::size_t>(prefix_max + 1), 0);
        for (int i = 0; i < m; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])] |= mask_t{1} << i;
        for (mask_t b : blocks) comps.push_back(SubsetMask::from_bits(m, b));
    }
    return Multiset(m, std::move(comps));
}

} // namespace

std::vector<RandomInstance> random_balanced_corpus(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<RandomInstance> out;
    out.reserve(count);
    while (out.size() < count) {
        int m = 2 + static_cast<int>(gen() % 4);
        int n = 1 + static_cast<int>(gen() % 4);
        Multiset ms = random_balanced(gen, n, m);
        if (ms.size() > 12 || ms.has_repeated_proper_mask()) continue;
        out.push_back(RandomInstance{std::move(ms), n});
    }
    return out;
}

std::vector<constructions::ConstructedInstance> construction_corpus(int max_m, std::size_t max_size, int max_n) {
    using namespace constructions;
    std::vector<ConstructedInstance> out;
    auto keep = [&](ConstructedInstance inst) {
        if (inst.claimed_size <= max_size && inst.n <= max_n) out.push_back(std::move(inst));
    };
    for (int m = 1; m <= max_m; ++m) {
        keep(theorem12_construction(m));
        for (int n = 1; n <= std::min(max_n, 4); ++n) keep(trivial_construction(n, m));
        int budget = m >= 2 ? (1 << (m - 1)) - 1 : 0;
        for (int n = 1; n <= budget; ++n) {
            if (static_cast<std::size_t>(2 * n) > max_size || n > max_n) break;
            keep(pair_construction(n, m));
        }
        for (int extra = 1; extra <= 2; ++extra) {
            int n = budget + extra;
            if (static_cast<std::size_t>(n) + static_cast<std::size_t>(budget) <= max_size && n <= max_n)
                keep(shift_construction(n, m));
        }
        for (int k = 2; k < m; ++k)
            for (int n = 1; central_regime_ok(n, m, k); ++n) {
                if (static_cast<std::size_t>(k) * static_cast<std::size_t>(n) > max_size || n > max_n) break;
                keep(central_construction(n, m, k));
            }
        for (int n = 1; n <= 2 * budget && n <= max_n; ++n)
            if (mixed_regime_ok(n, m) && static_cast<std::size_t>(2 * n) <= max_size) {
                ConstructedInstance inst = mixed_construction(n, m);
                if (inst.claimed_size <= max_size) out.push_back(std::move(inst));
            }
    }
    return out;
}

Multiset fixture_multiset(const char* name) {
    std::string path = std::string(URM_TEST_DATA_DIR) + "/" + name;
    return io::multiset_from_json(io::parse_document(io::read_text_file(path)));
}

} // namespace urm::testing
