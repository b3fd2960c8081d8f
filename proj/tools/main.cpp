// treenest CLI: build combinatorial objects, run named verification
// suites, export complexes and reports as JSON.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "treenest/json_io.hpp"
#include "treenest/lattice.hpp"
#include "treenest/nbc.hpp"
#include "treenest/nested.hpp"
#include "treenest/remark3.hpp"
#include "treenest/simplicial_complex.hpp"
#include "treenest/subdivision.hpp"
#include "treenest/trees.hpp"

namespace tn = treenest;

namespace {

void writeOutput(const tn::Json& j, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(outPath);
        if (!f)
            throw std::runtime_error("cannot open output file: " + outPath);
        f << j.dump(2) << "\n";
    }
}

struct Report {
    tn::Json checks = tn::Json::array();
    bool pass = true;

    template <typename E, typename A>
    void check(const std::string& name, const E& expected, const A& actual) {
        bool ok = tn::Json(expected) == tn::Json(actual);
        checks.push_back(tn::Json{{"name", name},
                                  {"expected", expected},
                                  {"actual", actual},
                                  {"pass", ok}});
        pass = pass && ok;
    }
    void checkTrue(const std::string& name, bool actual) { check(name, true, actual); }

    tn::Json json(const std::string& suite) const {
        return tn::Json{{"suite", suite}, {"checks", checks}, {"pass", pass}};
    }
};

tn::FieldSpec parseField(const std::string& s) {
    if (s == "rational")
        return tn::FieldSpec::rationals();
    if (s.rfind("prime:", 0) == 0)
        return tn::FieldSpec::prime(std::stol(s.substr(6)));
    throw CLI::ValidationError("--field", "expected 'rational' or 'prime:<p>'");
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

tn::SimplicialComplex buildComplex(const std::string& kind, int n, int k) {
    if (kind == "tree-complex")
        return tn::enumerate_tn(n);
    if (kind == "nested-complex") {
        tn::FiniteLattice L = tn::build_partition_lattice(n);
        return tn::nested_set_complex(L, tn::minimal_building_set(L), true);
    }
    if (kind == "k-trees")
        return tn::enumerate_hanlon_k_trees(n, k);
    if (kind == "k-equal-trees")
        return tn::enumerate_k_equal_trees(n, k);
    if (kind == "order-complex") {
        if (k > 0) {
            tn::FiniteLattice L = tn::build_k_equal_lattice(n, k);
            return tn::order_complex(L);
        }
        return tn::order_complex(tn::build_partition_lattice(n));
    }
    throw CLI::ValidationError("kind", "unknown build kind: " + kind);
}

int runBuild(const std::string& kind, int n, int k, const std::string& outPath) {
    if (kind == "partition-lattice" || kind == "k-equal-lattice") {
        tn::FiniteLattice L = kind == "partition-lattice"
                                  ? tn::build_partition_lattice(n)
                                  : tn::build_k_equal_lattice(n, k);
        writeOutput(tn::lattice_to_json(L), outPath);
        std::cerr << kind << ": " << L.size() << " elements, " << L.atoms.size()
                  << " atoms, rank " << L.rank[L.top] << "\n";
        return 0;
    }
    tn::SimplicialComplex K = buildComplex(kind, n, k);
    writeOutput(tn::complex_to_json(K), outPath);
    std::cerr << kind << ": " << K.numVertices() << " vertices, " << K.numFacets()
              << " facets, dimension " << K.dimension() << "\n";
    return 0;
}

void suiteThm31(Report& rep, int n) {
    rep.checkTrue("thm31 identity n=" + std::to_string(n), tn::verify_tn_identity(n));
}

void suiteBetti(Report& rep, int n, const tn::FieldSpec& F) {
    tn::SimplicialComplex Tn = tn::enumerate_tn(n);
    std::vector<long> expected(n - 2, 0);
    expected[n - 3] = factorial(n - 1);
    rep.check("reduced betti of T_" + std::to_string(n), expected, tn::reduced_betti(Tn, F));
}

void suiteCor32(Report& rep, int n) {
    tn::FiniteLattice L = tn::build_partition_lattice(n);
    auto [K, trace] = tn::subdivide_to_order_complex(L);
    rep.checkTrue("end equals order complex n=" + std::to_string(n),
                  tn::complexes_equal(K, tn::order_complex(L)));
    rep.checkTrue("trace replay reproduces end", tn::complexes_equal(trace.replay(), K));
    std::vector<long> betti = tn::reduced_betti(trace.start);
    bool preserved = true;
    tn::SimplicialComplex cur = trace.start;
    for (const auto& s : trace.steps) {
        cur = tn::stellar_subdivision(cur, s.face, s.newVertex);
        if (tn::reduced_betti(cur) != betti)
            preserved = false;
    }
    rep.checkTrue("betti preserved at every step", preserved);
    if (n == 5) {
        rep.check("vertices of order complex of Pi_5", 50, K.numVertices());
        rep.check("facets of order complex of Pi_5", 180, K.numFacets());
    }
}

void suiteProp44(Report& rep, int n) {
    tn::FiniteLattice L = tn::build_partition_lattice(n);
    tn::AtomOrderedGeometricLattice G(L);
    tn::BijectionTriangleReport r = tn::verify_bijection_triangle(G);
    rep.check("common cardinality n=" + std::to_string(n), factorial(n - 1), r.nbcCount);
    rep.checkTrue("bijection triangle holds", r.holds());
}

void suiteProp46(Report& rep, int n) {
    tn::FiniteLattice L = tn::build_partition_lattice(n);
    tn::BuildingSet I = tn::minimal_building_set(L);
    auto [K, trace] = tn::subdivide_to_order_complex(L);
    auto anc = trace.facetAncestors();
    bool allMatch = true;
    long count = 0;
    for (const auto& chain : tn::maximal_chains(L)) {
        std::vector<int> proper(chain.begin() + 1, chain.end() - 1);
        std::vector<int> S = tn::support_simplex(L, I, proper);
        tn::LabelFace formula, chainFace;
        for (int x : S)
            formula.push_back(L.labels[x]);
        for (int x : proper)
            chainFace.push_back(L.labels[x]);
        std::sort(formula.begin(), formula.end());
        std::sort(chainFace.begin(), chainFace.end());
        if (anc.at(chainFace) != formula)
            allMatch = false;
        ++count;
    }
    rep.check("maximal chains checked n=" + std::to_string(n),
              n == 4 ? 18L : (n == 5 ? 180L : count), count);
    rep.checkTrue("support simplex formula matches trace", allMatch);
}

void suiteProp48(Report& rep, int n) {
    rep.check("admissible tree count n=" + std::to_string(n), factorial(n - 1),
              static_cast<long>(tn::admissible_trees(n).size()));
    rep.checkTrue("evaluation matrix full rank", tn::verify_admissible_basis(n));
}

void suiteRemark3(Report& rep) {
    tn::Remark3Report r = tn::verify_remark3_non_refinement();
    rep.check("subdivision triangles", 3, r.subdivisionTriangles);
    rep.check("subdivision edges", 7, r.subdivisionEdges);
    rep.checkTrue("edge (23|45, 23|145) present", r.figureEdgePresent);
    rep.check("edge covered by bsd", false, r.edgeCoveredByBsd);
    rep.checkTrue("bsd refines itself (control)", r.bsdSelfRefines);
}

void suiteProp56(Report& rep, int n, int k) {
    tn::FiniteLattice L = tn::build_k_equal_lattice(n, k);
    tn::SimplicialComplex T = tn::enumerate_k_equal_trees(n, k);
    tn::SimplicialComplex N = tn::nested_set_complex(L, tn::minimal_building_set(L), true);
    std::string tag = " (" + std::to_string(n) + "," + std::to_string(k) + ")";
    rep.checkTrue("T_{n,k} equals N(Pi_{n,k},I)" + tag, tn::complexes_equal(T, N));
    auto [K, trace] = tn::subdivide_to_order_complex(L);
    rep.checkTrue("pipeline ends in order complex" + tag,
                  tn::complexes_equal(K, tn::order_complex(L)));
    auto padded = [](std::vector<long> v, std::size_t len) {
        v.resize(len, 0);
        return v;
    };
    std::vector<long> b0 = tn::reduced_betti(trace.start), b1 = tn::reduced_betti(K);
    std::size_t len = std::max(b0.size(), b1.size());
    rep.check("graded betti preserved" + tag, padded(b0, len), padded(b1, len));
}

void suiteQ52(Report& rep) {
    long b0trees = tn::reduced_betti(tn::enumerate_hanlon_k_trees(3, 2)).at(0);
    long b0poset = tn::reduced_betti(tn::order_complex(tn::build_block_size_poset(5, 2))).at(0);
    rep.check("betti_0 of T_3^(2)", 9L, b0trees);
    rep.check("betti_0 of order complex of Pi_5^(2)", 9L, b0poset);
    std::vector<long> bTrees = tn::reduced_betti(tn::enumerate_hanlon_k_trees(4, 2));
    std::vector<long> bPoset =
        tn::reduced_betti(tn::order_complex(tn::build_block_size_poset(7, 2)));
    rep.check("betti_1 agreement for T_4^(2) vs Pi_7^(2)", bTrees.at(1), bPoset.at(1));
}

int runVerify(const std::string& suite, int n, int k, const tn::FieldSpec& F, int maxN,
              const std::string& outPath) {
    Report rep;
    auto range = [&](int lo, int hi) {
        std::vector<int> ns;
        if (n > 0) {
            ns.push_back(n);
        } else {
            for (int i = lo; i <= std::min(hi, maxN); ++i)
                ns.push_back(i);
        }
        return ns;
    };
    if (suite == "thm31") {
        for (int i : range(3, 6))
            suiteThm31(rep, i);
    } else if (suite == "betti") {
        for (int i : range(3, 6))
            suiteBetti(rep, i, F);
    } else if (suite == "cor32") {
        for (int i : range(4, 5))
            suiteCor32(rep, i);
    } else if (suite == "prop44") {
        for (int i : range(3, 6))
            suiteProp44(rep, i);
    } else if (suite == "prop46") {
        for (int i : range(4, 5))
            suiteProp46(rep, i);
    } else if (suite == "prop48") {
        for (int i : range(3, 5))
            suiteProp48(rep, i);
    } else if (suite == "remark3") {
        suiteRemark3(rep);
    } else if (suite == "prop56") {
        if (n > 0) {
            suiteProp56(rep, n, k > 0 ? k : 3);
        } else {
            suiteProp56(rep, 5, 3);
            suiteProp56(rep, 6, 3);
            suiteProp56(rep, 7, 3);
        }
    } else if (suite == "q52-evidence") {
        suiteQ52(rep);
    } else {
        throw CLI::ValidationError("suite", "unknown suite: " + suite);
    }
    writeOutput(rep.json(suite), outPath);
    return rep.pass ? 0 : 1;
}

int runTrace(int n, const std::string& outPath) {
    if (n < 3 || n > 5)
        throw CLI::ValidationError("--n", "trace supports 3 <= n <= 5");
    tn::FiniteLattice L = tn::build_partition_lattice(n);
    auto [K, trace] = tn::subdivide_to_order_complex(L);
    (void)K;
    writeOutput(tn::trace_to_json(trace), outPath);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nested set complexes, complexes of trees, and their verification suites"};
    app.require_subcommand(1);

    std::string kind, suite, outPath, fieldStr = "rational";
    int n = 0, k = 0, maxN = 6;

    CLI::App* build = app.add_subcommand("build", "construct an object and emit JSON");
    build->add_option("kind", kind,
                      "partition-lattice | k-equal-lattice | tree-complex | nested-complex"
                      " | k-trees | k-equal-trees | order-complex")
        ->required();
    build->add_option("--n", n, "ground-set / leaf parameter")->required();
    build->add_option("--k", k, "secondary parameter where applicable");
    build->add_option("--out", outPath, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite,
                       "thm31 | cor32 | prop44 | prop46 | prop48 | remark3 | prop56"
                       " | q52-evidence | betti")
        ->required();
    verify->add_option("--n", n, "restrict to a single n");
    verify->add_option("--k", k, "k parameter (prop56)");
    verify->add_option("--field", fieldStr, "rational | prime:<p> (default rational)");
    verify->add_option("--max-n", maxN, "safety cap for homology suites (default 6)");
    verify->add_option("--out", outPath, "output path (default stdout)");

    CLI::App* traceCmd = app.add_subcommand("trace", "emit the stellar subdivision trace to the order complex");
    traceCmd->add_option("--n", n, "3 <= n <= 5")->required();
    traceCmd->add_option("--out", outPath, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed())
            return runBuild(kind, n, k, outPath);
        if (verify->parsed())
            return runVerify(suite, n, k, parseField(fieldStr), maxN, outPath);
        return runTrace(n, outPath);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
