#include <doctest.h>

#include <cstdio>
#include <string>

#include "corpus.hpp"
#include "urm/io.hpp"

using namespace urm;
using io::json;

TEST_CASE("multiset documents round trip and normalize") {
    Multiset ms = Multiset::from_lists(4, {{1, 2}, {3, 4}, {2, 1}});
    json doc = io::multiset_to_json(ms);
    CHECK(doc["m"] == 4);
    CHECK(doc["components"] == json::array({{1, 2}, {3, 4}, {1, 2}}));
    CHECK(io::multiset_from_json(doc) == ms);
    CHECK(io::parse_document(io::render(doc)) == doc);

    CHECK(io::multiset_from_json(io::parse_document(R"({"m":2,"components":[[2,1]]})")) ==
          Multiset::from_lists(2, {{1, 2}}));
}

TEST_CASE("malformed multiset documents are rejected") {
    CHECK_THROWS_AS((void)io::parse_document("{"), malformed_input_error);
    CHECK_THROWS_AS((void)io::multiset_from_json(io::parse_document(R"({"components":[]})")),
                    malformed_input_error);
    CHECK_THROWS_AS((void)io::multiset_from_json(io::parse_document(R"({"m":"two","components":[]})")),
                    malformed_input_error);
    CHECK_THROWS_AS((void)io::multiset_from_json(io::parse_document(R"({"m":2,"components":7})")),
                    malformed_input_error);
    CHECK_THROWS_AS((void)io::multiset_from_json(io::parse_document(R"({"m":2,"components":[["a"]]})")),
                    malformed_input_error);
    CHECK_THROWS_AS((void)io::multiset_from_json(io::parse_document(R"({"m":2,"components":[[3]]})")),
                    malformed_input_error);
    CHECK_THROWS_AS((void)io::multiset_from_json(io::parse_document("[1,2]")), malformed_input_error);
}

TEST_CASE("partition documents round trip") {
    Partition p{{{0, 2}, {1, 3}}};
    json doc = io::partition_to_json(p);
    CHECK(doc == json::array({{0, 2}, {1, 3}}));
    CHECK(io::partition_from_json(doc).classes == p.classes);
    CHECK_THROWS_AS((void)io::partition_from_json(io::parse_document("{}")), malformed_input_error);
    CHECK_THROWS_AS((void)io::partition_from_json(io::parse_document("[[0],1]")), malformed_input_error);
}

TEST_CASE("instance documents round trip") {
    constructions::ConstructedInstance inst = constructions::mixed_construction(5, 4);
    json doc = io::instance_to_json(inst);
    constructions::ConstructedInstance back = io::instance_from_json(doc);
    CHECK(back.ms == inst.ms);
    CHECK(back.partition.classes == inst.partition.classes);
    CHECK(back.n == inst.n);
    CHECK(back.m == inst.m);
    CHECK(back.claimed_size == inst.claimed_size);
    CHECK(back.provenance == inst.provenance);
    CHECK(io::render(io::instance_to_json(back)) == io::render(doc));
}

TEST_CASE("instance documents must be internally consistent") {
    json good = io::instance_to_json(constructions::theorem12_construction(4));

    json bad = good;
    bad["claimed_size"] = 10;
    CHECK_THROWS_AS((void)io::instance_from_json(bad), malformed_input_error);

    bad = good;
    bad["n"] = 3;
    CHECK_THROWS_AS((void)io::instance_from_json(bad), malformed_input_error);

    bad = good;
    bad["partition"] = json::array({{0, 1, 2, 3, 4}, json::array()});
    CHECK_THROWS_AS((void)io::instance_from_json(bad), malformed_input_error);

    bad = good;
    bad["partition"][1][0] = 0;
    CHECK_THROWS_AS((void)io::instance_from_json(bad), malformed_input_error);

    bad = good;
    bad["provenance"] = "FOLKLORE";
    CHECK_THROWS_AS((void)io::instance_from_json(bad), malformed_input_error);
}

TEST_CASE("resolution reports serialize with canonical witnesses") {
    Multiset fig2 = testing::fixture_multiset("fig2.json");
    json doc = io::report_to_json(enumerate_resolutions(fig2, 2));
    CHECK(doc["status"] == "UNIQUE");
    CHECK(doc["witnesses"].size() == 1);
    CHECK(doc["witnesses"][0] ==
          json::array({json::array({{1}, {2, 3}, {4}}), json::array({{1, 2}, {3, 4}})}));
    CHECK(doc["nodes_explored"].get<std::int64_t>() > 0);
}

TEST_CASE("bounds reports serialize exact as value or null") {
    json known = io::bounds_to_json(bounds::bounds_report(2, 5));
    CHECK(known["n"] == 2);
    CHECK(known["m"] == 5);
    CHECK(known["lower"] == 6);
    CHECK(known["upper"] == 6);
    CHECK(known["exact"] == 6);
    CHECK(known["regime"] == "N_EQUALS_2");
    CHECK(known["sources"].is_array());

    json open = io::bounds_to_json(bounds::bounds_report(7, 10));
    CHECK(open["lower"] == 21);
    CHECK(open["upper"] == 70);
    CHECK(open["exact"].is_null());
    CHECK(open["regime"] == "SMALL");
}

TEST_CASE("search results serialize their witness instance") {
    json doc = io::exact_to_json(oracle::g_exact_search(2, 3));
    CHECK(doc["value"] == 4);
    CHECK(doc["exhausted"] == true);
    CHECK(doc["witness"].is_object());
    CHECK(doc["witness"]["provenance"] == "SEARCH");
    CHECK(io::instance_from_json(doc["witness"]).claimed_size == 4);
}

TEST_CASE("puzzle documents round trip bit for bit") {
    zebra::Puzzle pz = zebra::generate_minimal_puzzle(3, 4, 99);
    json doc = io::puzzle_to_json(pz);
    zebra::Puzzle back = io::puzzle_from_json(doc);
    CHECK(back.n == pz.n);
    CHECK(back.m == pz.m);
    CHECK(back.rules == pz.rules);
    CHECK(back.seed == pz.seed);
    CHECK(io::render(io::puzzle_to_json(back)) == io::render(doc));

    json bad = doc;
    bad["rules"][0].erase("val_b");
    CHECK_THROWS_AS((void)io::puzzle_from_json(bad), malformed_input_error);
}

TEST_CASE("solutions name people by their category values") {
    zebra::Puzzle pz;
    pz.n = 2;
    pz.m = 5;
    pz.categories = zebra::default_naming(2, 5);
    pz.rules = {{0, 0, 1, 0}, {2, 0, 3, 0}, {4, 0, 2, 0}, {1, 1, 2, 1}};
    auto sols = zebra::solve_puzzle(pz, 2);
    REQUIRE(sols.size() == 1);
    json doc = io::solution_to_json(sols[0], pz);
    CHECK(doc["people"][0]["Color"] == "Red");
    CHECK(doc["people"][0]["Pet"] == "Dog");
    CHECK(doc["people"][1]["Drink"] == "Tea");
    CHECK(doc["people"][1]["Sport"] == "Chess");
    CHECK(doc["values"] == json(sols[0].values));
}

TEST_CASE("text files round trip through the helpers") {
    const std::string path = "io_tmp_roundtrip.json";
    io::write_text_file(path, "{\n  \"m\": 2\n}\n");
    CHECK(io::read_text_file(path) == "{\n  \"m\": 2\n}\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS((void)io::read_text_file("does_not_exist_anywhere.json"), malformed_input_error);
}
