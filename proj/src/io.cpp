#include "urm/io.hpp"

#include <fstream>
#include <sstream>

#include "urm/errors.hpp"

namespace urm::io {

namespace {

const json& field(const json& doc, const char* key) {
    if (!doc.is_object()) throw malformed_input_error("expected an object with field '" + std::string(key) + "'");
    auto it = doc.find(key);
    if (it == doc.end()) throw malformed_input_error("missing field '" + std::string(key) + "'");
    return *it;
}

std::int64_t int_field(const json& doc, const char* key) {
    const json& v = field(doc, key);
    if (!v.is_number_integer()) throw malformed_input_error("field '" + std::string(key) + "' must be an integer");
    return v.get<std::int64_t>();
}

std::vector<int> int_array(const json& arr, const char* what) {
    if (!arr.is_array()) throw malformed_input_error(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(arr.size());
    for (const json& x : arr) {
        if (!x.is_number_integer())
            throw malformed_input_error(std::string(what) + " must contain only integers");
        out.push_back(x.get<int>());
    }
    return out;
}

} // namespace

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw malformed_input_error(std::string("document does not parse: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw malformed_input_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw malformed_input_error("cannot write " + path);
    out << content;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

json multiset_to_json(const Multiset& ms) {
    json comps = json::array();
    for (const SubsetMask& c : ms.components()) comps.push_back(c.elements());
    return json{{"m", ms.ground_size()}, {"components", std::move(comps)}};
}

Multiset multiset_from_json(const json& doc) {
    int m = static_cast<int>(int_field(doc, "m"));
    const json& comps = field(doc, "components");
    if (!comps.is_array()) throw malformed_input_error("field 'components' must be an array");
    std::vector<std::vector<int>> lists;
    lists.reserve(comps.size());
    for (const json& c : comps) lists.push_back(int_array(c, "component"));
    return Multiset::from_lists(m, lists);
}

json partition_to_json(const Partition& p) {
    json out = json::array();
    for (const auto& cls : p.classes) out.push_back(cls);
    return out;
}

Partition partition_from_json(const json& doc) {
    if (!doc.is_array()) throw malformed_input_error("partition must be an array of index arrays");
    Partition p;
    for (const json& cls : doc) p.classes.push_back(int_array(cls, "partition class"));
    return p;
}

json instance_to_json(const constructions::ConstructedInstance& inst) {
    json out = multiset_to_json(inst.ms);
    out["partition"] = partition_to_json(inst.partition);
    out["n"] = inst.n;
    out["claimed_size"] = inst.claimed_size;
    out["provenance"] = constructions::to_string(inst.provenance);
    return out;
}

constructions::ConstructedInstance instance_from_json(const json& doc) {
    Multiset ms = multiset_from_json(doc);
    Partition p = partition_from_json(field(doc, "partition"));
    int n = static_cast<int>(int_field(doc, "n"));
    auto claimed = int_field(doc, "claimed_size");
    const json& prov = field(doc, "provenance");
    if (!prov.is_string()) throw malformed_input_error("field 'provenance' must be a string");

    if (p.classes.size() != static_cast<std::size_t>(n))
        throw malformed_input_error("partition has " + std::to_string(p.classes.size()) +
                                    " classes, field 'n' says " + std::to_string(n));
    if (claimed < 0 || static_cast<std::size_t>(claimed) != ms.size())
        throw malformed_input_error("claimed_size " + std::to_string(claimed) + " does not match " +
                                    std::to_string(ms.size()) + " components");
    if (!is_valid_partition(ms, p))
        throw malformed_input_error("partition is not an exact cover partition of the multiset");
    int m = ms.ground_size();
    return constructions::ConstructedInstance{std::move(ms), std::move(p), n, m,
                                              static_cast<std::size_t>(claimed),
                                              constructions::provenance_from_string(prov.get<std::string>())};
}

json canonical_partition_to_json(const CanonicalPartition& cp) {
    json out = json::array();
    for (const auto& cls : cp.classes) {
        json jc = json::array();
        for (mask_t b : cls) jc.push_back(mask_elements(b));
        out.push_back(std::move(jc));
    }
    return out;
}

json report_to_json(const ResolutionReport& report) {
    json wits = json::array();
    for (const CanonicalPartition& w : report.witnesses) wits.push_back(canonical_partition_to_json(w));
    return json{{"status", to_string(report.status)},
                {"witnesses", std::move(wits)},
                {"nodes_explored", report.nodes_explored}};
}

json bounds_to_json(const bounds::BoundsReport& report) {
    return json{{"n", report.n},
                {"m", report.m},
                {"lower", report.lower},
                {"lower_analytic", report.lower_analytic},
                {"upper", report.upper},
                {"exact", report.exact ? json(*report.exact) : json(nullptr)},
                {"regime", bounds::to_string(report.regime)},
                {"sources", report.sources}};
}

json exact_to_json(const oracle::ExactResult& result) {
    return json{{"value", result.value},
                {"witness", result.witness ? instance_to_json(*result.witness) : json(nullptr)},
                {"exhausted", result.exhausted},
                {"candidates_examined", result.candidates_examined},
                {"nodes", result.nodes}};
}

json puzzle_to_json(const zebra::Puzzle& pz) {
    json cats = json::array();
    for (const zebra::Category& c : pz.categories) cats.push_back(json{{"name", c.name}, {"values", c.values}});
    json rules = json::array();
    for (const zebra::Rule& r : pz.rules)
        rules.push_back(json{{"cat_a", r.cat_a}, {"val_a", r.val_a}, {"cat_b", r.cat_b}, {"val_b", r.val_b}});
    return json{{"n", pz.n},
                {"m", pz.m},
                {"categories", std::move(cats)},
                {"rules", std::move(rules)},
                {"seed", pz.seed}};
}

zebra::Puzzle puzzle_from_json(const json& doc) {
    zebra::Puzzle pz;
    pz.n = static_cast<int>(int_field(doc, "n"));
    pz.m = static_cast<int>(int_field(doc, "m"));
    const json& cats = field(doc, "categories");
    if (!cats.is_array()) throw malformed_input_error("field 'categories' must be an array");
    for (const json& c : cats) {
        zebra::Category cat;
        const json& name = field(c, "name");
        if (!name.is_string()) throw malformed_input_error("category 'name' must be a string");
        cat.name = name.get<std::string>();
        const json& vals = field(c, "values");
        if (!vals.is_array()) throw malformed_input_error("category 'values' must be an array");
        for (const json& v : vals) {
            if (!v.is_string()) throw malformed_input_error("category values must be strings");
            cat.values.push_back(v.get<std::string>());
        }
        pz.categories.push_back(std::move(cat));
    }
    const json& rules = field(doc, "rules");
    if (!rules.is_array()) throw malformed_input_error("field 'rules' must be an array");
    for (const json& r : rules)
        pz.rules.push_back(zebra::Rule{static_cast<int>(int_field(r, "cat_a")), static_cast<int>(int_field(r, "val_a")),
                                       static_cast<int>(int_field(r, "cat_b")),
                                       static_cast<int>(int_field(r, "val_b"))});
    const json& seed = field(doc, "seed");
    if (!seed.is_number_integer() && !seed.is_number_unsigned())
        throw malformed_input_error("field 'seed' must be an integer");
    pz.seed = seed.get<std::uint64_t>();
    return pz;
}

json solution_to_json(const zebra::PuzzleSolution& sol, const zebra::Puzzle& pz) {
    json people = json::array();
    for (int p = 0; p < pz.n; ++p) {
        json person = json::object();
        for (int c = 0; c < pz.m; ++c) {
            const zebra::Category& cat = pz.categories[static_cast<std::size_t>(c)];
            person[cat.name] =
                cat.values[static_cast<std::size_t>(sol.values[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)])];
        }
        people.push_back(std::move(person));
    }
    return json{{"values", sol.values}, {"people", std::move(people)}};
}

} // namespace urm::io
