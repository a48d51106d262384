// urm: construct, resolve, bound and puzzle-ify uniquely resolvable
// multisets from the command line. `--format structured` emits the
// machine-readable documents; text output is for people.

#include <atomic>
#include <csignal>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "urm/io.hpp"

namespace {

std::atomic<bool> g_cancel{false};

void on_sigint(int) { g_cancel.store(true, std::memory_order_relaxed); }

struct Output {
    std::string path; // empty = stdout
    void emit(const std::string& text) const {
        if (path.empty())
            std::cout << text;
        else
            urm::io::write_text_file(path, text);
    }
    void emit(const urm::io::json& doc) const { emit(urm::io::render(doc)); }
};

std::string class_line(const std::vector<urm::mask_t>& masks) {
    std::string s;
    for (urm::mask_t b : masks) {
        if (!s.empty()) s += " ";
        s += urm::mask_to_string(b);
    }
    return s;
}

std::string instance_text(const urm::constructions::ConstructedInstance& inst) {
    std::ostringstream out;
    out << urm::constructions::to_string(inst.provenance) << "  n=" << inst.n << " m=" << inst.m
        << "  size=" << inst.claimed_size << "\n";
    for (std::size_t i = 0; i < inst.partition.classes.size(); ++i) {
        std::vector<urm::mask_t> masks;
        for (int ci : inst.partition.classes[i]) masks.push_back(inst.ms.component(static_cast<std::size_t>(ci)).bits());
        out << "class " << i + 1 << ": " << class_line(masks) << "\n";
    }
    return std::move(out).str();
}

std::string report_text(const urm::ResolutionReport& report) {
    std::ostringstream out;
    out << urm::to_string(report.status) << "  (" << report.nodes_explored << " nodes)\n";
    for (std::size_t w = 0; w < report.witnesses.size(); ++w) {
        out << "partition " << w + 1 << ":\n";
        for (const auto& cls : report.witnesses[w].classes) out << "  " << class_line(cls) << "\n";
    }
    return std::move(out).str();
}

std::string bounds_text(const urm::bounds::BoundsReport& r) {
    std::ostringstream out;
    out << "n=" << r.n << " m=" << r.m << "  lower=" << r.lower << "  upper=" << r.upper;
    if (r.exact) out << "  exact=" << *r.exact;
    out << "  regime=" << urm::bounds::to_string(r.regime) << "\n";
    for (const std::string& s : r.sources) out << "  " << s << "\n";
    return std::move(out).str();
}

std::string table_text(const std::vector<urm::bounds::BoundsReport>& rows) {
    std::ostringstream out;
    out << "   n    m    lower    upper    exact  regime\n";
    for (const auto& r : rows) {
        out.width(4);
        out << r.n;
        out.width(5);
        out << r.m;
        out.width(9);
        out << r.lower;
        out.width(9);
        out << r.upper;
        out.width(9);
        if (r.exact)
            out << *r.exact;
        else
            out << "-";
        out << "  " << urm::bounds::to_string(r.regime) << "\n";
    }
    return std::move(out).str();
}

std::string puzzle_text(const urm::zebra::Puzzle& pz) {
    std::ostringstream out;
    out << pz.n << " people, " << pz.m << " categories, " << pz.rules.size() << " rules (seed " << pz.seed << ")\n";
    for (const auto& cat : pz.categories) {
        out << cat.name << ":";
        for (const auto& v : cat.values) out << " " << v;
        out << "\n";
    }
    for (const auto& r : pz.rules) {
        const auto& a = pz.categories[static_cast<std::size_t>(r.cat_a)];
        const auto& b = pz.categories[static_cast<std::size_t>(r.cat_b)];
        out << "rule: the " << a.values[static_cast<std::size_t>(r.val_a)] << " person has "
            << b.values[static_cast<std::size_t>(r.val_b)] << "\n";
    }
    return std::move(out).str();
}

std::string solutions_text(const std::vector<urm::zebra::PuzzleSolution>& sols, const urm::zebra::Puzzle& pz,
                           std::size_t limit) {
    std::ostringstream out;
    if (sols.empty())
        out << "no solutions\n";
    else if (sols.size() == 1)
        out << "exactly one solution\n";
    else
        out << "at least " << sols.size() << " solutions" << (sols.size() >= limit ? " (limit reached)" : "") << "\n";
    for (std::size_t s = 0; s < sols.size(); ++s) {
        out << "solution " << s + 1 << ":\n";
        for (int p = 0; p < pz.n; ++p) {
            out << "  person " << p + 1 << ":";
            for (int c = 0; c < pz.m; ++c) {
                const auto& cat = pz.categories[static_cast<std::size_t>(c)];
                out << " " << cat.name << "="
                    << cat.values[static_cast<std::size_t>(
                           sols[s].values[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)])];
            }
            out << "\n";
        }
    }
    return std::move(out).str();
}

urm::constructions::ConstructedInstance dispatch_construct(const std::string& kind, int n, int m, int k) {
    using namespace urm::constructions;
    if (kind == "best") return best_construction(n, m);
    if (kind == "trivial") return trivial_construction(n, m);
    if (kind == "theorem12") return theorem12_construction(m);
    if (kind == "pair") return pair_construction(n, m);
    if (kind == "central") return central_construction(n, m, k);
    if (kind == "mixed") return mixed_construction(n, m);
    if (kind == "shift") return shift_construction(n, m);
    throw urm::malformed_input_error("unknown construction kind '" + kind + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniquely resolvable multisets: constructions, resolution, bounds and puzzles"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("-o,--output", out_path, "write output to a file instead of stdout");

    int n = 0, m = 0, k = 3;
    std::string kind = "best", input;
    std::size_t limit = 2;
    std::uint64_t seed = 0;
    std::int64_t max_candidates = std::int64_t{1} << 60;
    std::int64_t max_nodes = std::int64_t{1} << 60;
    std::int64_t time_cap_ms = 0;
    int n_min = 1, n_max = 0, m_min = 0, m_max = 0;

    CLI::App* construct = app.add_subcommand("construct", "build a uniquely resolvable multiset");
    construct->fallthrough();
    construct->add_option("--n", n, "number of classes")->required();
    construct->add_option("--m", m, "ground set size")->required();
    construct->add_option("--k", k, "class size (central construction)");
    construct->add_option("--kind", kind, "construction to use")
        ->check(CLI::IsMember({"best", "trivial", "theorem12", "pair", "central", "mixed", "shift"}));

    CLI::App* resolve = app.add_subcommand("resolve", "count the exact-cover partitions of a multiset");
    resolve->fallthrough();
    resolve->add_option("input", input, "multiset document")->required();
    resolve->add_option("--n", n, "number of classes")->required();
    resolve->add_option("--limit", limit, "stop after this many distinct partitions");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "lower/upper bounds for one (n, m)");
    bounds_cmd->fallthrough();
    bounds_cmd->add_option("--n", n, "number of classes")->required();
    bounds_cmd->add_option("--m", m, "ground set size")->required();

    CLI::App* table = app.add_subcommand("table", "bounds rows over ranges of n and m");
    table->fallthrough();
    table->add_option("--m", m, "fixed ground set size");
    table->add_option("--m-min", m_min, "smallest m");
    table->add_option("--m-max", m_max, "largest m");
    table->add_option("--n-min", n_min, "smallest n");
    table->add_option("--n-max", n_max, "largest n (default 2^{m-1}+1)");

    CLI::App* exact = app.add_subcommand("exact", "exhaustive search for the largest multiset");
    exact->fallthrough();
    exact->add_option("--n", n, "number of classes")->required();
    exact->add_option("--m", m, "ground set size")->required();
    exact->add_option("--max-candidates", max_candidates, "candidate budget");
    exact->add_option("--max-nodes", max_nodes, "resolver node budget");
    exact->add_option("--time-cap-ms", time_cap_ms, "wall clock budget in milliseconds");

    CLI::App* zebra_cmd = app.add_subcommand("zebra", "grid puzzle correspondence");
    zebra_cmd->fallthrough();
    CLI::App* zgen = zebra_cmd->add_subcommand("gen", "generate a minimal-rule puzzle");
    zgen->fallthrough();
    zgen->add_option("--n", n, "people")->required();
    zgen->add_option("--m", m, "categories")->required();
    zgen->add_option("--seed", seed, "generation seed");
    CLI::App* zsolve = zebra_cmd->add_subcommand("solve", "solve a puzzle");
    zsolve->fallthrough();
    zsolve->add_option("input", input, "puzzle document")->required();
    zsolve->add_option("--limit", limit, "stop after this many solutions");
    CLI::App* zcheck = zebra_cmd->add_subcommand("check", "compare a puzzle's rule count with the optimum");
    zcheck->fallthrough();
    zcheck->add_option("input", input, "puzzle document")->required();
    zebra_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    const bool structured = format == "structured";
    Output out{out_path};
    std::signal(SIGINT, on_sigint);

    try {
        if (construct->parsed()) {
            auto inst = dispatch_construct(kind, n, m, k);
            structured ? out.emit(urm::io::instance_to_json(inst)) : out.emit(instance_text(inst));
        } else if (resolve->parsed()) {
            urm::Multiset ms = urm::io::multiset_from_json(urm::io::parse_document(urm::io::read_text_file(input)));
            urm::ResolutionReport report = urm::enumerate_resolutions(ms, n, limit);
            structured ? out.emit(urm::io::report_to_json(report)) : out.emit(report_text(report));
        } else if (bounds_cmd->parsed()) {
            auto report = urm::bounds::bounds_report(n, m);
            structured ? out.emit(urm::io::bounds_to_json(report)) : out.emit(bounds_text(report));
        } else if (table->parsed()) {
            if (m > 0) m_min = m_max = m;
            if (m_min < 1 || m_max < m_min)
                throw urm::malformed_input_error("table needs --m or --m-min/--m-max");
            std::vector<urm::bounds::BoundsReport> rows;
            for (int mm = m_min; mm <= m_max; ++mm) {
                int top = n_max > 0 ? n_max : (mm >= 2 ? (1 << (mm - 1)) + 1 : 2);
                for (int nn = n_min; nn <= top; ++nn) rows.push_back(urm::bounds::bounds_report(nn, mm));
            }
            if (structured) {
                urm::io::json doc = urm::io::json::array();
                for (const auto& r : rows) doc.push_back(urm::io::bounds_to_json(r));
                out.emit(doc);
            } else {
                out.emit(table_text(rows));
            }
        } else if (exact->parsed()) {
            urm::oracle::SearchBudget budget;
            budget.max_candidates = max_candidates;
            budget.max_nodes = max_nodes;
            if (time_cap_ms > 0) budget.time_cap = std::chrono::milliseconds(time_cap_ms);
            budget.cancel = &g_cancel;
            urm::oracle::ExactResult result = urm::oracle::g_exact_search(n, m, budget);
            if (structured) {
                out.emit(urm::io::exact_to_json(result));
            } else {
                std::ostringstream text;
                text << "g(" << n << "," << m << ") " << (result.exhausted ? "=" : ">=") << " " << result.value
                     << (result.exhausted ? "  (certified)" : "  (budget hit, best found)") << "\n";
                if (result.witness) text << instance_text(*result.witness);
                out.emit(std::move(text).str());
            }
        } else if (zgen->parsed()) {
            urm::zebra::Puzzle pz = urm::zebra::generate_minimal_puzzle(n, m, seed);
            structured ? out.emit(urm::io::puzzle_to_json(pz)) : out.emit(puzzle_text(pz));
        } else if (zsolve->parsed()) {
            urm::zebra::Puzzle pz = urm::io::puzzle_from_json(urm::io::parse_document(urm::io::read_text_file(input)));
            auto sols = urm::zebra::solve_puzzle(pz, limit);
            if (structured) {
                urm::io::json doc = urm::io::json::array();
                for (const auto& s : sols) doc.push_back(urm::io::solution_to_json(s, pz));
                out.emit(doc);
            } else {
                out.emit(solutions_text(sols, pz, limit));
            }
        } else if (zcheck->parsed()) {
            urm::zebra::Puzzle pz = urm::io::puzzle_from_json(urm::io::parse_document(urm::io::read_text_file(input)));
            urm::Multiset ms = urm::zebra::puzzle_to_multiset(pz);
            urm::ResolutionReport report = urm::enumerate_resolutions(ms, pz.n, 2);
            std::int64_t min_rules_here = static_cast<std::int64_t>(pz.n) * pz.m - static_cast<std::int64_t>(ms.size());
            auto g = urm::bounds::exact_value(pz.n, pz.m);
            std::int64_t best_known =
                g ? static_cast<std::int64_t>(pz.n) * pz.m - *g
                  : static_cast<std::int64_t>(pz.n) * pz.m -
                        static_cast<std::int64_t>(urm::constructions::best_construction(pz.n, pz.m).claimed_size);
            if (structured) {
                out.emit(urm::io::json{{"n", pz.n},
                                       {"m", pz.m},
                                       {"rules", pz.rules.size()},
                                       {"multiset", urm::io::multiset_to_json(ms)},
                                       {"status", urm::to_string(report.status)},
                                       {"min_rules_this_multiset", min_rules_here},
                                       {"best_known_rules", best_known}});
            } else {
                std::ostringstream text;
                text << pz.n << " people, " << pz.m << " categories, " << pz.rules.size() << " rules\n"
                     << "multiset size " << ms.size() << ", resolution " << urm::to_string(report.status) << "\n"
                     << "fewest rules for this multiset: " << min_rules_here << " (redundant: "
                     << static_cast<std::int64_t>(pz.rules.size()) - min_rules_here << ")\n"
                     << "fewest rules known for n=" << pz.n << " m=" << pz.m << ": " << best_known << "\n";
                out.emit(std::move(text).str());
            }
        }
    } catch (const urm::malformed_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const urm::regime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const urm::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const urm::inconsistent_puzzle_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
