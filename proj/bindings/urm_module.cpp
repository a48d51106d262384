// Python bindings. Structured values cross the boundary as JSON strings so
// the document formats stay single-sourced in io; the python package
// decodes them into plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "urm/io.hpp"

namespace py = pybind11;

namespace {

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

urm::oracle::SearchBudget make_budget(std::int64_t max_candidates, std::int64_t max_nodes, std::int64_t time_cap_ms) {
    urm::oracle::SearchBudget budget;
    budget.max_candidates = max_candidates;
    budget.max_nodes = max_nodes;
    if (time_cap_ms > 0) budget.time_cap = std::chrono::milliseconds(time_cap_ms);
    return budget;
}

constexpr std::int64_t kNoBudget = std::int64_t{1} << 60;

} // namespace

PYBIND11_MODULE(_urm, mod) {
    mod.doc() = "uniquely resolvable multisets: core operations";

    py::register_exception<urm::malformed_input_error>(mod, "MalformedInputError", PyExc_ValueError);
    py::register_exception<urm::regime_error>(mod, "RegimeError", PyExc_ValueError);
    py::register_exception<urm::capacity_error>(mod, "CapacityError", PyExc_ValueError);
    py::register_exception<urm::inconsistent_puzzle_error>(mod, "InconsistentPuzzleError", PyExc_ValueError);

    mod.def("max_ground_size", &urm::max_ground_size);

    mod.def(
        "construct",
        [](const std::string& kind, int n, int m, int k) {
            return urm::io::render(urm::io::instance_to_json(dispatch_construct(kind, n, m, k)));
        },
        py::arg("kind"), py::arg("n"), py::arg("m"), py::arg("k") = 3);

    mod.def(
        "resolve",
        [](const std::string& multiset_json, int n, std::size_t limit) {
            urm::Multiset ms = urm::io::multiset_from_json(urm::io::parse_document(multiset_json));
            return urm::io::render(urm::io::report_to_json(urm::enumerate_resolutions(ms, n, limit)));
        },
        py::arg("multiset_json"), py::arg("n"), py::arg("limit") = 2);

    mod.def(
        "subset_criterion",
        [](const std::vector<int>& sizes, int m) { return urm::subset_criterion(sizes, m); }, py::arg("sizes"),
        py::arg("m"));

    mod.def(
        "bounds_report",
        [](int n, int m) { return urm::io::render(urm::io::bounds_to_json(urm::bounds::bounds_report(n, m))); },
        py::arg("n"), py::arg("m"));

    mod.def("exact_value", &urm::bounds::exact_value, py::arg("n"), py::arg("m"));
    mod.def("binary_entropy", &urm::bounds::binary_entropy, py::arg("x"));
    mod.def("theorem23_k", &urm::bounds::theorem23_k, py::arg("n"), py::arg("m"));

    mod.def(
        "g_exact_search",
        [](int n, int m, std::int64_t max_candidates, std::int64_t max_nodes, std::int64_t time_cap_ms) {
            auto result = urm::oracle::g_exact_search(n, m, make_budget(max_candidates, max_nodes, time_cap_ms));
            return urm::io::render(urm::io::exact_to_json(result));
        },
        py::arg("n"), py::arg("m"), py::arg("max_candidates") = kNoBudget, py::arg("max_nodes") = kNoBudget,
        py::arg("time_cap_ms") = 0);

    mod.def(
        "p_k_search",
        [](int k, int m, std::int64_t max_candidates, std::int64_t max_nodes, std::int64_t time_cap_ms) {
            auto result = urm::oracle::p_k_search(k, m, make_budget(max_candidates, max_nodes, time_cap_ms));
            return urm::io::render(urm::io::exact_to_json(result));
        },
        py::arg("k"), py::arg("m"), py::arg("max_candidates") = kNoBudget, py::arg("max_nodes") = kNoBudget,
        py::arg("time_cap_ms") = 0);

    mod.def(
        "generate_minimal_puzzle",
        [](int n, int m, std::uint64_t seed) {
            return urm::io::render(urm::io::puzzle_to_json(urm::zebra::generate_minimal_puzzle(n, m, seed)));
        },
        py::arg("n"), py::arg("m"), py::arg("seed") = 0);

    mod.def(
        "puzzle_from_instance",
        [](const std::string& instance_json, std::uint64_t seed) {
            auto inst = urm::io::instance_from_json(urm::io::parse_document(instance_json));
            auto pz = urm::zebra::puzzle_from_multiset(inst, urm::zebra::default_naming(inst.n, inst.m), seed);
            return urm::io::render(urm::io::puzzle_to_json(pz));
        },
        py::arg("instance_json"), py::arg("seed") = 0);

    mod.def(
        "puzzle_to_multiset",
        [](const std::string& puzzle_json) {
            auto pz = urm::io::puzzle_from_json(urm::io::parse_document(puzzle_json));
            return urm::io::render(urm::io::multiset_to_json(urm::zebra::puzzle_to_multiset(pz)));
        },
        py::arg("puzzle_json"));

    mod.def(
        "solve_puzzle",
        [](const std::string& puzzle_json, std::size_t limit) {
            auto pz = urm::io::puzzle_from_json(urm::io::parse_document(puzzle_json));
            urm::io::json doc = urm::io::json::array();
            for (const auto& sol : urm::zebra::solve_puzzle(pz, limit)) doc.push_back(urm::io::solution_to_json(sol, pz));
            return urm::io::render(doc);
        },
        py::arg("puzzle_json"), py::arg("limit") = 2);
}
