#include <catch2/catch_amalgamated.hpp>

#include "treenest/json_io.hpp"
#include "treenest/nested.hpp"
#include "treenest/trees.hpp"

using namespace treenest;

TEST_CASE("complex JSON round trip") {
    SECTION("several complexes survive a write/read cycle") {
        FiniteLattice L = build_partition_lattice(4);
        std::vector<SimplicialComplex> cases{
            enumerate_tn(4),
            enumerate_tn(5),
            nested_set_complex(L, minimal_building_set(L), true),
            SimplicialComplex::fromLabelFaces({{"a"}, {"b", "c"}}),
        };
        for (const auto& K : cases) {
            Json j = complex_to_json(K);
            SimplicialComplex back = complex_from_json(j);
            CHECK(back == K);
        }
    }
    SECTION("isolated vertices survive the round trip") {
        SimplicialComplex K = enumerate_tn(3);  // three isolated points
        SimplicialComplex back = complex_from_json(complex_to_json(K));
        CHECK(back.numVertices() == 3);
        CHECK(back == K);
    }
    SECTION("reader accepts unsorted facet arrays") {
        Json j;
        j["vertices"] = {"a", "b", "c"};
        j["facets"] = {{2, 0}, {1}};
        SimplicialComplex K = complex_from_json(j);
        CHECK(K.isLabelFace({"a", "c"}));
        CHECK(K.numFacets() == 2);
    }
    SECTION("writer output is canonical and deterministic") {
        SimplicialComplex K = enumerate_tn(4);
        std::string a = complex_to_json(K).dump(2);
        std::string b = complex_to_json(enumerate_tn(4)).dump(2);
        CHECK(a == b);
        Json j = complex_to_json(K);
        auto vs = j["vertices"].get<std::vector<std::string>>();
        CHECK(std::is_sorted(vs.begin(), vs.end()));
        for (const auto& f : j["facets"]) {
            auto idx = f.get<std::vector<int>>();
            CHECK(std::is_sorted(idx.begin(), idx.end()));
        }
    }
}

TEST_CASE("lattice JSON") {
    FiniteLattice L = build_partition_lattice(3);
    Json j = lattice_to_json(L);
    CHECK(j["elements"].size() == 5);
    CHECK(j["elements"][L.bottom] == "0");
    CHECK(j["elements"][j["top"].get<int>()] == "123");
    CHECK(j["is_lattice"] == true);
    CHECK(j["atoms"].size() == 3);
    CHECK(j["covers"].size() == 6);  // 3 up from bottom, 3 up to top

    FiniteLattice P = build_block_size_poset(5, 2);
    CHECK(lattice_to_json(P)["is_lattice"] == false);
}

TEST_CASE("trace JSON") {
    FiniteLattice L = build_partition_lattice(4);
    auto [K, trace] = subdivide_to_order_complex(L);
    Json j = trace_to_json(trace);
    CHECK(j["steps"].size() == trace.steps.size());
    SimplicialComplex start = complex_from_json(j["start"]);
    SimplicialComplex end = complex_from_json(j["end"]);
    CHECK(start == trace.start);
    CHECK(end == K);
    // replaying the serialized steps from the serialized start gives the end
    SimplicialComplex cur = start;
    for (const auto& s : j["steps"]) {
        LabelFace face = s["face"].get<LabelFace>();
        cur = stellar_subdivision(cur, face, s["new_vertex"].get<std::string>());
    }
    CHECK(cur == end);
}
