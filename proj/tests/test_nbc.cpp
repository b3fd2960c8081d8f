#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "treenest/nbc.hpp"

using namespace treenest;

namespace {

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

std::set<std::string> labelSet(const FiniteLattice& L, const std::vector<int>& xs) {
    std::set<std::string> out;
    for (int x : xs)
        out.insert(L.labels[x]);
    return out;
}

int atomOf(const FiniteLattice& L, int i, int j) {
    return L.indexOf(SetPartition::singleBlock(L.partitions.front().groundSize(), {i, j}));
}

// Circuits of the graphic matroid of K_n: edge sets of simple cycles.
std::set<std::set<std::string>> graphicCircuitOracle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i, j);
    std::set<std::set<std::string>> out;
    // enumerate all subsets; keep those where every vertex has degree 2
    // on the touched vertices and the edge set is connected (a cycle)
    const int m = static_cast<int>(edges.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> deg(n + 1, 0);
        std::vector<int> chosen;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) {
                chosen.push_back(i);
                ++deg[edges[i].first];
                ++deg[edges[i].second];
            }
        bool cycle = true;
        int touched = 0;
        for (int v = 1; v <= n; ++v) {
            if (deg[v] == 0)
                continue;
            ++touched;
            if (deg[v] != 2)
                cycle = false;
        }
        if (!cycle || static_cast<int>(chosen.size()) != touched)
            continue;
        // connectivity of the chosen edges
        std::vector<int> comp(n + 1, -1);
        auto flood = [&](int start) {
            std::vector<int> stack{start};
            comp[start] = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int e : chosen) {
                    int a = edges[e].first, b = edges[e].second;
                    int w = v == a ? b : (v == b ? a : -1);
                    if (w > 0 && comp[w] < 0) {
                        comp[w] = 0;
                        stack.push_back(w);
                    }
                }
            }
        };
        flood(edges[chosen.front()].first);
        bool connected = true;
        for (int v = 1; v <= n; ++v)
            if (deg[v] > 0 && comp[v] < 0)
                connected = false;
        if (!connected)
            continue;
        std::set<std::string> labels;
        for (int e : chosen)
            labels.insert(std::to_string(edges[e].first) + std::to_string(edges[e].second));
        out.insert(std::move(labels));
    }
    return out;
}

}  // namespace

TEST_CASE("AtomOrderedGeometricLattice certification") {
    SECTION("partition lattices are geometric") {
        for (int n = 3; n <= 5; ++n) {
            FiniteLattice L = build_partition_lattice(n);
            CHECK_NOTHROW(AtomOrderedGeometricLattice(L));
        }
    }
    SECTION("Boolean lattices are geometric") {
        FiniteLattice B = build_boolean_lattice(3);
        CHECK_NOTHROW(AtomOrderedGeometricLattice(B));
    }
    SECTION("k-equal lattices with k >= 3 are rejected") {
        FiniteLattice L = build_k_equal_lattice(5, 3);
        CHECK_THROWS_AS(AtomOrderedGeometricLattice(L), std::domain_error);
    }
    SECTION("bad atom orders are rejected") {
        FiniteLattice L = build_partition_lattice(3);
        CHECK_THROWS_AS(AtomOrderedGeometricLattice(L, {L.atoms[0]}),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            AtomOrderedGeometricLattice(L, {L.atoms[0], L.atoms[0], L.atoms[1]}),
            std::invalid_argument);
    }
    SECTION("default omega on Pi_n is lexicographic on pairs") {
        FiniteLattice L = build_partition_lattice(4);
        AtomOrderedGeometricLattice G(L);
        std::vector<std::string> got;
        for (int a : G.atomOrder())
            got.push_back(L.labels[a]);
        CHECK(got == std::vector<std::string>{"12", "13", "14", "23", "24", "34"});
    }
}

TEST_CASE("circuits_and_broken_circuits") {
    SECTION("Pi_3: one circuit, one broken circuit") {
        FiniteLattice L = build_partition_lattice(3);
        AtomOrderedGeometricLattice G(L);
        auto [circuits, broken] = circuits_and_broken_circuits(G);
        REQUIRE(circuits.size() == 1);
        CHECK(labelSet(L, circuits[0]) == std::set<std::string>{"12", "13", "23"});
        REQUIRE(broken.size() == 1);
        CHECK(labelSet(L, broken[0]) == std::set<std::string>{"13", "23"});
    }
    SECTION("B_3: no circuits") {
        FiniteLattice B = build_boolean_lattice(3);
        AtomOrderedGeometricLattice G(B);
        auto [circuits, broken] = circuits_and_broken_circuits(G);
        CHECK(circuits.empty());
        CHECK(broken.empty());
    }
    SECTION("Pi_4 circuits match the graphic matroid of K_4") {
        FiniteLattice L = build_partition_lattice(4);
        AtomOrderedGeometricLattice G(L);
        auto [circuits, broken] = circuits_and_broken_circuits(G);
        std::set<std::set<std::string>> got;
        for (const auto& c : circuits)
            got.insert(labelSet(L, c));
        CHECK(got == graphicCircuitOracle(4));
        CHECK(circuits.size() == 7);  // 4 triangles + 3 quadrilaterals
        (void)broken;
    }
}

TEST_CASE("nbc_bases") {
    SECTION("characterization oracle for Pi_n: {(1,2),(i_2,3),...}, i_j <= j") {
        for (int n = 4; n <= 5; ++n) {
            FiniteLattice L = build_partition_lattice(n);
            AtomOrderedGeometricLattice G(L);
            std::set<std::set<std::string>> got;
            for (const auto& b : nbc_bases(G))
                got.insert(labelSet(L, b));
            std::set<std::set<std::string>> expect;
            std::vector<int> choice(n + 1, 1);
            auto rec = [&](auto&& self, int j) -> void {
                if (j > n) {
                    std::set<std::string> basis;
                    for (int t = 2; t <= n; ++t)
                        basis.insert(std::to_string(choice[t]) + std::to_string(t));
                    expect.insert(std::move(basis));
                    return;
                }
                for (int i = 1; i < j; ++i) {
                    choice[j] = i;
                    self(self, j + 1);
                }
            };
            rec(rec, 2);
            CHECK(got == expect);
            CHECK(static_cast<long>(got.size()) == factorial(n - 1));
        }
    }
    SECTION("Pi_5 contains {12,14,23,45}") {
        FiniteLattice L = build_partition_lattice(5);
        AtomOrderedGeometricLattice G(L);
        std::set<std::set<std::string>> got;
        for (const auto& b : nbc_bases(G))
            got.insert(labelSet(L, b));
        CHECK(got.count({"12", "14", "23", "45"}) == 1);
    }
}

TEST_CASE("decreasing_chains") {
    SECTION("Pi_5 contains the worked-example chain with labels (45,23,14,12)") {
        FiniteLattice L = build_partition_lattice(5);
        AtomOrderedGeometricLattice G(L);
        bool found = false;
        for (const auto& c : decreasing_chains(G)) {
            if (c.toString(L) == "0<45<23|45<23|145<12345") {
                found = true;
                std::vector<std::string> labels;
                for (int a : c.labels)
                    labels.push_back(L.labels[a]);
                CHECK(labels == std::vector<std::string>{"45", "23", "14", "12"});
            }
        }
        CHECK(found);
    }
    SECTION("counts") {
        FiniteLattice L4 = build_partition_lattice(4);
        FiniteLattice B3 = build_boolean_lattice(3);
        CHECK(decreasing_chains(AtomOrderedGeometricLattice(L4)).size() == 6);
        CHECK(decreasing_chains(AtomOrderedGeometricLattice(B3)).size() == 1);
    }
    SECTION("maximal chain count of Pi_4 is 18") {
        CHECK(maximal_chains(build_partition_lattice(4)).size() == 18);
    }
}

TEST_CASE("psi") {
    SECTION("worked example: Psi({12,14,23,45})") {
        FiniteLattice L = build_partition_lattice(5);
        AtomOrderedGeometricLattice G(L);
        LabeledChain c = psi(G, {atomOf(L, 1, 2), atomOf(L, 1, 4), atomOf(L, 2, 3),
                                 atomOf(L, 4, 5)});
        CHECK(c.toString(L) == "0<45<23|45<23|145<12345");
    }
    SECTION("rank-2 basis {a,b}: 0 < b < top") {
        FiniteLattice L = build_partition_lattice(3);
        AtomOrderedGeometricLattice G(L);
        LabeledChain c = psi(G, {atomOf(L, 1, 2), atomOf(L, 2, 3)});
        CHECK(c.toString(L) == "0<23<123");
    }
    SECTION("Pi_4, {12,13,14}: suffix joins") {
        FiniteLattice L = build_partition_lattice(4);
        AtomOrderedGeometricLattice G(L);
        LabeledChain c = psi(G, {atomOf(L, 1, 2), atomOf(L, 1, 3), atomOf(L, 1, 4)});
        CHECK(c.toString(L) == "0<14<134<1234");
    }
    SECTION("non-basis input is rejected") {
        FiniteLattice L = build_partition_lattice(4);
        AtomOrderedGeometricLattice G(L);
        CHECK_THROWS_AS(psi(G, {atomOf(L, 1, 2), atomOf(L, 1, 3), atomOf(L, 2, 3)}),
                        std::invalid_argument);
    }
    SECTION("every Psi image is a strictly decreasing chain") {
        FiniteLattice L = build_partition_lattice(5);
        AtomOrderedGeometricLattice G(L);
        for (const auto& b : nbc_bases(G)) {
            LabeledChain c = psi(G, b);
            for (std::size_t i = 1; i < c.labels.size(); ++i)
                CHECK(G.omegaPos(c.labels[i]) < G.omegaPos(c.labels[i - 1]));
        }
    }
}

TEST_CASE("theta and phi") {
    FiniteLattice L = build_partition_lattice(5);
    AtomOrderedGeometricLattice G(L);
    BuildingSet I = minimal_building_set(L);
    SECTION("worked example: Theta of the chain is {23,45,145,12345}") {
        LabeledChain c = psi(G, {atomOf(L, 1, 2), atomOf(L, 1, 4), atomOf(L, 2, 3),
                                 atomOf(L, 4, 5)});
        CHECK(labelSet(L, theta(G, I, c)) ==
              std::set<std::string>{"23", "45", "145", "12345"});
    }
    SECTION("irreducible chain maps to itself plus the top") {
        // 0 < 45 < 345 < 2345 < 12345: all elements irreducible
        std::vector<int> chain{L.bottom,
                               L.indexOf(SetPartition::singleBlock(5, {4, 5})),
                               L.indexOf(SetPartition::singleBlock(5, {3, 4, 5})),
                               L.indexOf(SetPartition::singleBlock(5, {2, 3, 4, 5})),
                               L.top};
        LabeledChain c = labelChain(G, chain);
        CHECK(labelSet(L, theta(G, I, c)) ==
              std::set<std::string>{"45", "345", "2345", "12345"});
    }
    SECTION("Pi_4 chain 0<14<134<top maps to {14,134,1234}") {
        FiniteLattice L4 = build_partition_lattice(4);
        AtomOrderedGeometricLattice G4(L4);
        BuildingSet I4 = minimal_building_set(L4);
        std::vector<int> chain{L4.bottom,
                               L4.indexOf(SetPartition::singleBlock(4, {1, 4})),
                               L4.indexOf(SetPartition::singleBlock(4, {1, 3, 4})),
                               L4.top};
        CHECK(labelSet(L4, theta(G4, I4, labelChain(G4, chain))) ==
              std::set<std::string>{"14", "134", "1234"});
    }
    SECTION("non-decreasing chain is rejected by theta") {
        // 0 < 12 < 123 < 1234 < 12345 has increasing labels
        std::vector<int> chain{L.bottom, atomOf(L, 1, 2),
                               L.indexOf(SetPartition::singleBlock(5, {1, 2, 3})),
                               L.indexOf(SetPartition::singleBlock(5, {1, 2, 3, 4})),
                               L.top};
        CHECK_THROWS_AS(theta(G, I, labelChain(G, chain)), std::invalid_argument);
    }
    SECTION("worked example: Phi of {23,45,145,12345} is {12,14,23,45}") {
        std::vector<int> S{L.indexOf(SetPartition::singleBlock(5, {2, 3})),
                           L.indexOf(SetPartition::singleBlock(5, {4, 5})),
                           L.indexOf(SetPartition::singleBlock(5, {1, 4, 5})), L.top};
        std::vector<std::string> got;
        for (int a : phi(G, S))
            got.push_back(L.labels[a]);
        CHECK(got == std::vector<std::string>{"12", "14", "23", "45"});
    }
    SECTION("repeated phi image means not proper") {
        FiniteLattice L4 = build_partition_lattice(4);
        AtomOrderedGeometricLattice G4(L4);
        std::vector<int> S{L4.indexOf(SetPartition::singleBlock(4, {1, 2})),
                           L4.indexOf(SetPartition::singleBlock(4, {3, 4})), L4.top};
        auto img = phi(G4, S);
        std::vector<std::string> labels;
        for (int a : img)
            labels.push_back(L4.labels[a]);
        CHECK(labels == std::vector<std::string>{"12", "12", "34"});
        CHECK_FALSE(is_proper_nested_set(G4, S));
    }
}

TEST_CASE("verify_bijection_triangle") {
    SECTION("Pi_4: cardinality 6") {
        FiniteLattice L = build_partition_lattice(4);
        AtomOrderedGeometricLattice G(L);
        auto r = verify_bijection_triangle(G);
        CHECK(r.nbcCount == 6);
        CHECK(r.holds());
    }
    SECTION("Pi_5: cardinality 24") {
        FiniteLattice L = build_partition_lattice(5);
        AtomOrderedGeometricLattice G(L);
        auto r = verify_bijection_triangle(G);
        CHECK(r.nbcCount == 24);
        CHECK(r.holds());
    }
    SECTION("B_3: cardinality 1") {
        FiniteLattice B = build_boolean_lattice(3);
        AtomOrderedGeometricLattice G(B);
        auto r = verify_bijection_triangle(G);
        CHECK(r.nbcCount == 1);
        CHECK(r.holds());
    }
}

TEST_CASE("support_simplex") {
    FiniteLattice L = build_partition_lattice(5);
    BuildingSet I = minimal_building_set(L);
    SECTION("worked example: chain 45 < 23|45 < 23|145 supports {23,45,145}") {
        std::vector<int> chain{
            L.indexOf(SetPartition::singleBlock(5, {4, 5})),
            L.indexOf(SetPartition::fromBlocks(5, {{2, 3}, {4, 5}, {1}})),
            L.indexOf(SetPartition::fromBlocks(5, {{2, 3}, {1, 4, 5}}))};
        CHECK(labelSet(L, support_simplex(L, I, chain)) ==
              std::set<std::string>{"23", "45", "145"});
    }
    SECTION("all-irreducible chain supports itself") {
        std::vector<int> chain{L.indexOf(SetPartition::singleBlock(5, {4, 5})),
                               L.indexOf(SetPartition::singleBlock(5, {3, 4, 5})),
                               L.indexOf(SetPartition::singleBlock(5, {2, 3, 4, 5}))};
        CHECK(support_simplex(L, I, chain) == chain);
    }
    SECTION("bottom or top in the chain is rejected") {
        CHECK_THROWS_AS(support_simplex(L, I, {L.bottom}), std::invalid_argument);
        CHECK_THROWS_AS(support_simplex(L, I, {L.top}), std::invalid_argument);
    }
    SECTION("matches the subdivision-trace oracle on all 18 chains of Pi_4") {
        FiniteLattice L4 = build_partition_lattice(4);
        BuildingSet I4 = minimal_building_set(L4);
        auto [K, trace] = subdivide_to_order_complex(L4);
        (void)K;
        auto anc = trace.facetAncestors();
        auto chains = maximal_chains(L4);
        REQUIRE(chains.size() == 18);
        for (const auto& chain : chains) {
            std::vector<int> proper(chain.begin() + 1, chain.end() - 1);
            LabelFace formula, face;
            for (int x : support_simplex(L4, I4, proper))
                formula.push_back(L4.labels[x]);
            for (int x : proper)
                face.push_back(L4.labels[x]);
            std::sort(formula.begin(), formula.end());
            std::sort(face.begin(), face.end());
            REQUIRE(anc.count(face) == 1);
            CHECK(anc.at(face) == formula);
        }
    }
}

TEST_CASE("admissible_trees") {
    SECTION("n=3: exactly the (1,3) and (2,3) cherries") {
        auto adm = admissible_trees(3);
        std::set<std::string> got;
        for (const auto& T : adm)
            got.insert(T.toString());
        CHECK(got == std::set<std::string>{"((1,3),2)", "(1,(2,3))"});
    }
    SECTION("counts 2, 6, 24 for n = 3, 4, 5") {
        CHECK(admissible_trees(3).size() == 2);
        CHECK(admissible_trees(4).size() == 6);
        CHECK(admissible_trees(5).size() == 24);
    }
    SECTION("admissible facets coincide with the proper nested set facets") {
        for (int n = 4; n <= 5; ++n) {
            FiniteLattice L = build_partition_lattice(n);
            AtomOrderedGeometricLattice G(L);
            BuildingSet I = minimal_building_set(L);
            std::set<std::set<std::string>> fromTrees;
            for (const auto& T : admissible_trees(n)) {
                std::set<std::string> f;
                for (const auto& s : tree_to_nested(T))
                    f.insert(leafsetLabel(s));
                fromTrees.insert(std::move(f));
            }
            std::set<std::set<std::string>> fromPn;
            for (const auto& S : proper_maximal_nested_sets(G, I)) {
                std::set<std::string> f;
                for (int x : S)
                    if (x != L.top)
                        f.insert(L.labels[x]);
                fromPn.insert(std::move(f));
            }
            CHECK(fromTrees == fromPn);
        }
    }
}

TEST_CASE("verify_admissible_basis for n = 3, 4, 5") {
    CHECK(verify_admissible_basis(3));
    CHECK(verify_admissible_basis(4));
    CHECK(verify_admissible_basis(5));
    CHECK_THROWS_AS(verify_admissible_basis(6), std::invalid_argument);
}
