#include "urm/zebra.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "urm/errors.hpp"
#include "urm/partition.hpp"

namespace urm::zebra {

namespace {

constexpr int kMaxSolvePeople = 8;
constexpr int kMaxSolveCategories = 8;

const char* const kCategoryNames[] = {"Color", "Drink", "Pet", "Subject", "Sport", "Food", "Music", "Nation"};

const char* const kValueNames[][8] = {
    {"Red", "Blue", "Green", "Yellow", "White", "Purple", "Orange", "Black"},
    {"Coffee", "Tea", "Milk", "Juice", "Water", "Soda", "Cocoa", "Cider"},
    {"Dog", "Cat", "Bird", "Fish", "Horse", "Snake", "Rabbit", "Turtle"},
    {"Math", "CS", "Physics", "History", "Art", "Biology", "Chemistry", "Geology"},
    {"Tennis", "Chess", "Soccer", "Golf", "Swimming", "Cycling", "Boxing", "Rowing"},
    {"Pizza", "Pasta", "Sushi", "Salad", "Soup", "Bread", "Rice", "Stew"},
    {"Jazz", "Rock", "Folk", "Opera", "Blues", "Punk", "Reggae", "Techno"},
    {"Norway", "Japan", "Brazil", "Kenya", "Spain", "India", "Canada", "Egypt"},
};

constexpr int kStockCategories = 8;
constexpr int kStockValues = 8;

void check_puzzle(const Puzzle& pz) {
    if (pz.n < 1) throw malformed_input_error("puzzle needs at least one person, got n = " + std::to_string(pz.n));
    check_ground_size(pz.m);
    if (pz.categories.size() != static_cast<std::size_t>(pz.m))
        throw malformed_input_error("expected " + std::to_string(pz.m) + " categories, got " +
                                    std::to_string(pz.categories.size()));
    for (const Category& cat : pz.categories) {
        if (cat.values.size() != static_cast<std::size_t>(pz.n))
            throw malformed_input_error("category " + cat.name + " has " + std::to_string(cat.values.size()) +
                                        " values, expected " + std::to_string(pz.n));
        std::set<std::string> seen(cat.values.begin(), cat.values.end());
        if (seen.size() != cat.values.size())
            throw malformed_input_error("category " + cat.name + " repeats a value name");
    }
    for (const Rule& r : pz.rules) {
        if (r.cat_a < 0 || r.cat_a >= pz.m || r.cat_b < 0 || r.cat_b >= pz.m)
            throw malformed_input_error("rule references a category outside [0, " + std::to_string(pz.m) + ")");
        if (r.val_a < 0 || r.val_a >= pz.n || r.val_b < 0 || r.val_b >= pz.n)
            throw malformed_input_error("rule references a value outside [0, " + std::to_string(pz.n) + ")");
        if (r.cat_a == r.cat_b)
            throw malformed_input_error("rule relates two values of category " + pz.categories[r.cat_a].name);
    }
}

struct UnionFind {
    explicit UnionFind(int size) : parent(static_cast<std::size_t>(size)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
    std::vector<int> parent;
};

// Vertices are the n*m values, id = category * n + value; rule edges glue
// them into the people-fragments the puzzle pins down.
std::vector<std::vector<int>> rule_graph_groups(const Puzzle& pz) {
    UnionFind uf(pz.n * pz.m);
    for (const Rule& r : pz.rules) uf.unite(r.cat_a * pz.n + r.val_a, r.cat_b * pz.n + r.val_b);

    std::vector<int> group_of(static_cast<std::size_t>(pz.n * pz.m), -1);
    std::vector<std::vector<int>> groups;
    for (int v = 0; v < pz.n * pz.m; ++v) {
        int root = uf.find(v);
        if (group_of[static_cast<std::size_t>(root)] < 0) {
            group_of[static_cast<std::size_t>(root)] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(root)])].push_back(v);
    }

    for (const auto& g : groups) {
        mask_t cats = 0;
        for (int v : g) {
            mask_t bit = mask_t{1} << (v / pz.n);
            if (cats & bit) {
                const Category& cat = pz.categories[static_cast<std::size_t>(v / pz.n)];
                throw inconsistent_puzzle_error("rules force two " + cat.name + " values onto one person");
            }
            cats |= bit;
        }
    }
    return groups;
}

class PuzzleSolver {
public:
    PuzzleSolver(const Puzzle& pz, std::vector<std::vector<int>> groups, std::size_t limit)
        : pz_(pz), limit_(limit), full_(SubsetMask::full_bits(pz.m)) {
        for (const auto& g : groups) {
            Group grp;
            grp.verts = g;
            for (int v : g) grp.cats |= mask_t{1} << (v / pz_.n);
            groups_.push_back(std::move(grp));
        }
    }

    std::vector<PuzzleSolution> run() {
        assign(0);
        return std::move(solutions_);
    }

private:
    struct Group {
        std::vector<int> verts;
        mask_t cats = 0;
    };

    void assign(std::size_t g) {
        if (solutions_.size() >= limit_) return;
        if (g == groups_.size()) {
            finish();
            return;
        }
        const Group& grp = groups_[g];
        for (std::size_t p = 0; p < covers_.size(); ++p) {
            if (covers_[p] & grp.cats) continue;
            covers_[p] |= grp.cats;
            members_[p].push_back(g);
            assign(g + 1);
            members_[p].pop_back();
            covers_[p] &= ~grp.cats;
            if (solutions_.size() >= limit_) return;
        }
        if (covers_.size() < static_cast<std::size_t>(pz_.n)) {
            covers_.push_back(grp.cats);
            members_.push_back({g});
            assign(g + 1);
            members_.pop_back();
            covers_.pop_back();
        }
    }

    void finish() {
        if (covers_.size() != static_cast<std::size_t>(pz_.n)) return;
        for (mask_t c : covers_)
            if (c != full_) return;
        PuzzleSolution sol;
        sol.values.assign(static_cast<std::size_t>(pz_.m), std::vector<int>(static_cast<std::size_t>(pz_.n), -1));
        for (std::size_t p = 0; p < members_.size(); ++p) {
            int person = -1;
            for (std::size_t g : members_[p])
                for (int v : groups_[g].verts)
                    if (v / pz_.n == 0) person = v % pz_.n;
            for (std::size_t g : members_[p])
                for (int v : groups_[g].verts)
                    sol.values[static_cast<std::size_t>(v / pz_.n)][static_cast<std::size_t>(person)] = v % pz_.n;
        }
        solutions_.push_back(std::move(sol));
    }

    const Puzzle& pz_;
    std::size_t limit_;
    mask_t full_;
    std::vector<Group> groups_;
    std::vector<mask_t> covers_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<PuzzleSolution> solutions_;
};

} // namespace

std::vector<Category> default_naming(int n, int m) {
    if (n < 1) throw malformed_input_error("need at least one person, got n = " + std::to_string(n));
    check_ground_size(m);
    std::vector<Category> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        Category cat;
        cat.name = c < kStockCategories ? kCategoryNames[c] : "Category" + std::to_string(c + 1);
        for (int v = 0; v < n; ++v) {
            if (c < kStockCategories && v < kStockValues)
                cat.values.emplace_back(kValueNames[c][v]);
            else
                cat.values.push_back(cat.name + "#" + std::to_string(v + 1));
        }
        out.push_back(std::move(cat));
    }
    return out;
}

Puzzle puzzle_from_multiset(const constructions::ConstructedInstance& inst, const std::vector<Category>& naming,
                            std::uint64_t seed) {
    const int n = inst.n;
    const int m = inst.m;
    if (naming.size() != static_cast<std::size_t>(m))
        throw malformed_input_error("naming must provide " + std::to_string(m) + " categories, got " +
                                    std::to_string(naming.size()));
    for (const Category& cat : naming) {
        if (cat.values.size() != static_cast<std::size_t>(n))
            throw malformed_input_error("category " + cat.name + " needs " + std::to_string(n) + " values, got " +
                                        std::to_string(cat.values.size()));
        std::set<std::string> seen(cat.values.begin(), cat.values.end());
        if (seen.size() != cat.values.size())
            throw malformed_input_error("category " + cat.name + " repeats a value name");
    }
    if (inst.partition.classes.size() != static_cast<std::size_t>(n))
        throw malformed_input_error("instance has " + std::to_string(inst.partition.classes.size()) +
                                    " classes, expected n = " + std::to_string(n));
    if (!is_valid_partition(inst.ms, inst.partition))
        throw malformed_input_error("instance partition is not an exact cover partition");

    // perm[c][i] is person i's value in category c
    std::mt19937_64 gen(seed);
    std::vector<std::vector<int>> perm(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& p : perm) {
        std::iota(p.begin(), p.end(), 0);
        // hand-rolled Fisher-Yates: mt19937_64 output is pinned by the
        // standard, shuffle and distributions are not
        for (std::size_t j = p.size(); j > 1; --j)
            std::swap(p[j - 1], p[gen() % j]);
    }

    Puzzle pz;
    pz.n = n;
    pz.m = m;
    pz.categories = naming;
    pz.seed = seed;
    for (std::size_t i = 0; i < inst.partition.classes.size(); ++i) {
        std::vector<int> idxs = inst.partition.classes[i];
        std::sort(idxs.begin(), idxs.end());
        for (int ci : idxs) {
            std::vector<int> cats = inst.ms.component(static_cast<std::size_t>(ci)).elements();
            for (std::size_t j = 1; j < cats.size(); ++j) {
                int a = cats[j - 1] - 1;
                int b = cats[j] - 1;
                pz.rules.push_back(Rule{a, perm[static_cast<std::size_t>(a)][i], b, perm[static_cast<std::size_t>(b)][i]});
            }
        }
    }
    return pz;
}

Multiset puzzle_to_multiset(const Puzzle& pz) {
    check_puzzle(pz);
    std::vector<SubsetMask> comps;
    for (const auto& g : rule_graph_groups(pz)) {
        mask_t bits = 0;
        for (int v : g) bits |= mask_t{1} << (v / pz.n);
        comps.push_back(SubsetMask::from_bits(pz.m, bits));
    }
    return Multiset(pz.m, std::move(comps));
}

std::vector<PuzzleSolution> solve_puzzle(const Puzzle& pz, std::size_t limit) {
    check_puzzle(pz);
    if (limit < 1) throw malformed_input_error("limit must be at least 1");
    if (pz.n > kMaxSolvePeople || pz.m > kMaxSolveCategories)
        throw capacity_error("solver capped at " + std::to_string(kMaxSolvePeople) + " people and " +
                             std::to_string(kMaxSolveCategories) + " categories");
    return PuzzleSolver(pz, rule_graph_groups(pz), limit).run();
}

Puzzle generate_minimal_puzzle(int n, int m, std::uint64_t seed) {
    constructions::ConstructedInstance inst = constructions::best_construction(n, m);
    return puzzle_from_multiset(inst, default_naming(n, m), seed);
}

} // namespace urm::zebra
