#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "treenest/homology.hpp"
#include "treenest/lattice.hpp"
#include "treenest/nested.hpp"
#include "treenest/simplicial_complex.hpp"
#include "treenest/subdivision.hpp"
#include "treenest/trees.hpp"

namespace treenest {

/**
 * A geometric lattice together with a total order omega on its atoms.
 * Geometricity (atomicity plus rank semimodularity) is certified at
 * construction; the section-4 machinery refuses anything weaker.
 */
class AtomOrderedGeometricLattice {
public:
    /// `omega`: atom element indices in increasing omega order; when
    /// empty, atoms are ordered by their canonical labels (lexicographic,
    /// which for partition lattices is the lex order on pairs ij).
    explicit AtomOrderedGeometricLattice(const FiniteLattice& L, std::vector<int> omega = {})
        : L_(&L) {
        L.requireTables();
        if (omega.empty()) {
            omega = L.atoms;
            std::sort(omega.begin(), omega.end(),
                      [&](int a, int b) { return L.labels[a] < L.labels[b]; });
        }
        if (omega.size() != L.atoms.size())
            throw std::invalid_argument("atom order must list every atom exactly once");
        std::vector<int> sorted = omega;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != L.atoms)
            throw std::invalid_argument("atom order must list every atom exactly once");
        omega_ = std::move(omega);
        omegaPos_.assign(L.size(), -1);
        for (std::size_t i = 0; i < omega_.size(); ++i)
            omegaPos_[omega_[i]] = static_cast<int>(i);
        certifyGeometric();
    }

    // The lattice is held by reference; binding a temporary would dangle.
    explicit AtomOrderedGeometricLattice(FiniteLattice&&, std::vector<int> = {}) = delete;

    const FiniteLattice& lattice() const { return *L_; }
    const std::vector<int>& atomOrder() const { return omega_; }
    int omegaPos(int atom) const { return omegaPos_[atom]; }
    int latticeRank() const { return L_->rank[L_->top]; }

    /// Atoms below-or-equal X, in omega order.
    std::vector<int> atomsBelow(int X) const {
        std::vector<int> out;
        for (int a : omega_)
            if (L_->leq(a, X))
                out.push_back(a);
        return out;
    }

    /// Matroid rank of an atom set: lattice rank of its join.
    int atomSetRank(const std::vector<int>& A) const {
        int j = L_->bottom;
        for (int a : A)
            j = L_->join(j, a);
        return L_->rank[j];
    }

    bool independent(const std::vector<int>& A) const {
        return atomSetRank(A) == static_cast<int>(A.size());
    }

    /// EL-label of the cover X > Y: omega-minimal atom below X, not below Y.
    int elLabel(int X, int Y) const {
        for (int a : omega_)
            if (L_->leq(a, X) && !L_->leq(a, Y))
                return a;
        throw std::logic_error("elLabel: no separating atom (lattice not atomic?)");
    }

private:
    void certifyGeometric() {
        const FiniteLattice& L = *L_;
        // atomic: every element is the join of the atoms below it
        for (int x = 0; x < L.size(); ++x) {
            int j = L.bottom;
            for (int a : L.atoms)
                if (L.leq(a, x))
                    j = L.join(j, a);
            if (j != x)
                throw std::domain_error("lattice is not atomic");
        }
        // semimodular rank
        for (int x = 0; x < L.size(); ++x)
            for (int y = 0; y < L.size(); ++y)
                if (L.rank[x] + L.rank[y] <
                    L.rank[L.join(x, y)] + L.rank[L.meet(x, y)])
                    throw std::domain_error("lattice rank is not semimodular");
    }

    const FiniteLattice* L_;
    std::vector<int> omega_;
    std::vector<int> omegaPos_;
};

/**
 * A maximal lattice chain with its EL-label sequence
 * (lambda_i = min over omega of the atoms new at step i).
 */
struct LabeledChain {
    std::vector<int> chain;   // bottom < c_1 < ... < c_{r-1} < top, element indices
    std::vector<int> labels;  // r atom indices

    std::string toString(const FiniteLattice& L) const {
        std::string s;
        for (int c : chain) {
            if (!s.empty())
                s += '<';
            s += L.labels[c];
        }
        return s;
    }
    friend bool operator==(const LabeledChain& a, const LabeledChain& b) {
        return a.chain == b.chain;
    }
    friend bool operator<(const LabeledChain& a, const LabeledChain& b) {
        return a.chain < b.chain;
    }
};

inline LabeledChain labelChain(const AtomOrderedGeometricLattice& G, std::vector<int> chain) {
    const FiniteLattice& L = G.lattice();
    LabeledChain out;
    out.chain = std::move(chain);
    for (std::size_t i = 1; i < out.chain.size(); ++i)
        out.labels.push_back(G.elLabel(out.chain[i], out.chain[i - 1]));
    (void)L;
    return out;
}

/// All maximal chains bottom -> top through upper covers.
inline std::vector<std::vector<int>> maximal_chains(const FiniteLattice& L) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{L.bottom};
    auto rec = [&](auto&& self) -> void {
        int x = cur.back();
        if (x == L.top) {
            out.push_back(cur);
            return;
        }
        for (int y : L.coversAbove(x)) {
            cur.push_back(y);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

/**
 * Circuits (minimal dependent atom sets under the join-rank function)
 * and broken circuits (each circuit minus its omega-minimal atom).
 * Atom sets are omega-ordered index vectors.
 */
inline std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
circuits_and_broken_circuits(const AtomOrderedGeometricLattice& G) {
    const int r = G.latticeRank();
    const auto& atoms = G.atomOrder();
    std::vector<std::vector<int>> circuits;
    // subsets in size order; skip supersets of found circuits
    std::vector<int> cur;
    auto containsCircuit = [&](const std::vector<int>& s) {
        for (const auto& c : circuits)
            if (std::includes(s.begin(), s.end(), c.begin(), c.end()))
                return true;
        return false;
    };
    for (int size = 2; size <= r + 1; ++size) {
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (static_cast<int>(cur.size()) == size) {
                std::vector<int> sorted = cur;
                std::sort(sorted.begin(), sorted.end());
                if (containsCircuit(sorted))
                    return;
                if (G.atomSetRank(cur) < size)
                    circuits.push_back(sorted);
                return;
            }
            for (std::size_t i = start; i < atoms.size(); ++i) {
                cur.push_back(atoms[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }
    std::sort(circuits.begin(), circuits.end());
    std::vector<std::vector<int>> broken;
    for (const auto& c : circuits) {
        std::vector<int> b;
        int minAtom = c.front();
        for (int a : c)
            if (G.omegaPos(a) < G.omegaPos(minAtom))
                minAtom = a;
        for (int a : c)
            if (a != minAtom)
                b.push_back(a);
        std::sort(b.begin(), b.end());
        broken.push_back(std::move(b));
    }
    std::sort(broken.begin(), broken.end());
    broken.erase(std::unique(broken.begin(), broken.end()), broken.end());
    return {circuits, broken};
}

/// All no-broken-circuit bases, each sorted ascending in omega.
inline std::vector<std::vector<int>> nbc_bases(const AtomOrderedGeometricLattice& G) {
    const int r = G.latticeRank();
    auto [circuits, broken] = circuits_and_broken_circuits(G);
    std::vector<std::vector<int>> sortedBroken = broken;
    for (auto& b : sortedBroken)
        std::sort(b.begin(), b.end());
    const auto& atoms = G.atomOrder();
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < atoms.size(); ++i) {
            cur.push_back(atoms[i]);
            bool ok = G.independent(cur);
            if (ok) {
                std::vector<int> sorted = cur;
                std::sort(sorted.begin(), sorted.end());
                for (const auto& b : sortedBroken)
                    if (std::includes(sorted.begin(), sorted.end(), b.begin(), b.end())) {
                        ok = false;
                        break;
                    }
            }
            if (ok)
                self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Maximal chains with strictly decreasing EL-label sequence.
inline std::vector<LabeledChain> decreasing_chains(const AtomOrderedGeometricLattice& G) {
    std::vector<LabeledChain> out;
    for (auto& c : maximal_chains(G.lattice())) {
        LabeledChain lc = labelChain(G, std::move(c));
        bool dec = true;
        for (std::size_t i = 1; i < lc.labels.size(); ++i)
            if (G.omegaPos(lc.labels[i]) >= G.omegaPos(lc.labels[i - 1]))
                dec = false;
        if (dec)
            out.push_back(std::move(lc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Psi: chain of suffix joins of an nbc basis (ascending in omega).
inline LabeledChain psi(const AtomOrderedGeometricLattice& G, std::vector<int> basis) {
    const FiniteLattice& L = G.lattice();
    std::sort(basis.begin(), basis.end(),
              [&](int a, int b) { return G.omegaPos(a) < G.omegaPos(b); });
    if (static_cast<int>(basis.size()) != G.latticeRank() || !G.independent(basis))
        throw std::invalid_argument("psi: input is not a basis");
    std::vector<int> chain{L.bottom};
    int j = L.bottom;
    for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
        j = L.join(j, *it);
        chain.push_back(j);
    }
    if (chain.back() != L.top)
        throw std::invalid_argument("psi: basis joins do not reach the top");
    return labelChain(G, std::move(chain));
}

/// Theta: union of factor sets of the chain elements (top included),
/// w.r.t. the minimal building set.  Returns a maximal nested set in the
/// unreduced complex, as sorted element indices.
inline std::vector<int> theta(const AtomOrderedGeometricLattice& G, const BuildingSet& I,
                              const LabeledChain& c) {
    for (std::size_t i = 1; i < c.labels.size(); ++i)
        if (G.omegaPos(c.labels[i]) >= G.omegaPos(c.labels[i - 1]))
            throw std::invalid_argument("theta: chain labels are not strictly decreasing");
    const FiniteLattice& L = G.lattice();
    std::set<int> S;
    for (std::size_t i = 1; i < c.chain.size(); ++i)
        for (int f : factors(L, I, c.chain[i]))
            S.insert(f);
    return {S.begin(), S.end()};
}

/// Phi image: omega-minimal atom below each member (with multiplicity).
inline std::vector<int> phi(const AtomOrderedGeometricLattice& G,
                            const std::vector<int>& nestedSet) {
    std::vector<int> out;
    for (int s : nestedSet) {
        std::vector<int> below = G.atomsBelow(s);
        if (below.empty())
            throw std::logic_error("phi: member has no atom below it");
        out.push_back(below.front());
    }
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return G.omegaPos(a) < G.omegaPos(b); });
    return out;
}

/// Proper: the phi image is a basis (distinct atoms, full rank).
inline bool is_proper_nested_set(const AtomOrderedGeometricLattice& G,
                                 const std::vector<int>& nestedSet) {
    std::vector<int> image = phi(G, nestedSet);
    std::vector<int> uniq = image;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (uniq.size() != image.size())
        return false;
    return static_cast<int>(image.size()) == G.latticeRank() && G.independent(image);
}

/// Proper maximal nested sets pn_omega(L), sorted element-index sets.
inline std::vector<std::vector<int>> proper_maximal_nested_sets(
    const AtomOrderedGeometricLattice& G, const BuildingSet& I) {
    std::vector<std::vector<int>> out;
    for (const auto& S : maximal_nested_sets(G.lattice(), I))
        if (is_proper_nested_set(G, S))
            out.push_back(S);
    return out;
}

struct BijectionTriangleReport {
    long nbcCount = 0, dcCount = 0, pnCount = 0;
    bool psiWellDefined = false;   // image of Psi lies in dc, injectively
    bool thetaWellDefined = false; // image of Theta lies in pn, injectively
    bool roundTrip = false;        // Phi . Theta . Psi = identity on nbc
    bool holds() const {
        return nbcCount == dcCount && dcCount == pnCount && psiWellDefined &&
               thetaWellDefined && roundTrip;
    }
};

/// Bijection triangle: Psi, Theta bijective and Phi . Theta . Psi the identity.
inline BijectionTriangleReport verify_bijection_triangle(
    const AtomOrderedGeometricLattice& G) {
    const FiniteLattice& L = G.lattice();
    BuildingSet I = minimal_building_set(L);
    auto nbc = nbc_bases(G);
    auto dc = decreasing_chains(G);
    auto pn = proper_maximal_nested_sets(G, I);
    BijectionTriangleReport rep;
    rep.nbcCount = static_cast<long>(nbc.size());
    rep.dcCount = static_cast<long>(dc.size());
    rep.pnCount = static_cast<long>(pn.size());
    std::set<std::vector<int>> dcSet, pnSet(pn.begin(), pn.end());
    for (const auto& c : dc)
        dcSet.insert(c.chain);
    std::set<std::vector<int>> psiImages, thetaImages;
    rep.psiWellDefined = true;
    rep.thetaWellDefined = true;
    rep.roundTrip = true;
    for (const auto& b : nbc) {
        LabeledChain c = psi(G, b);
        if (!dcSet.count(c.chain) || !psiImages.insert(c.chain).second)
            rep.psiWellDefined = false;
    }
    for (const auto& c : dc) {
        std::vector<int> S = theta(G, I, c);
        if (!pnSet.count(S) || !thetaImages.insert(S).second)
            rep.thetaWellDefined = false;
    }
    for (const auto& b : nbc) {
        std::vector<int> back = phi(G, theta(G, I, psi(G, b)));
        std::vector<int> sortedB = b;
        std::sort(sortedB.begin(), sortedB.end());
        std::vector<int> sortedBack = back;
        std::sort(sortedBack.begin(), sortedBack.end());
        if (sortedB != sortedBack)
            rep.roundTrip = false;
    }
    return rep;
}

/**
 * Support formula: the facet of the reduced minimal nested set complex
 * supporting a maximal proper-part chain is the union of the factor sets
 * of its elements.
 */
inline std::vector<int> support_simplex(const FiniteLattice& L, const BuildingSet& I,
                                        const std::vector<int>& properChain) {
    if (properChain.empty())
        throw std::invalid_argument("support_simplex: empty chain");
    for (int x : properChain)
        if (x == L.bottom || x == L.top)
            throw std::invalid_argument("support_simplex: chain must avoid bottom and top");
    std::set<int> S;
    for (int x : properChain)
        for (int f : factors(L, I, x))
            S.insert(f);
    return {S.begin(), S.end()};
}

/// Binary facet trees of T_n passing the second-smallest-label test:
/// over the n-1 non-leaves (root included), the second-smallest leaf
/// labels below are exactly 2..n, each once.
inline std::vector<RootedTreeType> admissible_trees(int n) {
    if (n < 3)
        throw std::invalid_argument("admissible_trees: need n >= 3");
    std::vector<RootedTreeType> out;
    for (const auto& T : binary_facet_trees(n)) {
        std::vector<int> secondSmallest;
        for (const auto& ls : T.nonLeafLeafsets())
            secondSmallest.push_back(ls[1]);
        std::sort(secondSmallest.begin(), secondSmallest.end());
        std::vector<int> expect;
        for (int x = 2; x <= n; ++x)
            expect.push_back(x);
        if (secondSmallest == expect)
            out.push_back(T);
    }
    return out;
}

/**
 * Basis check: the characteristic cochains of the admissible facets have
 * full rank (n-1)! against a basis of top-dimensional cycles of T_n.
 */
inline bool verify_admissible_basis(int n) {
    if (n < 3 || n > 5)
        throw std::invalid_argument("verify_admissible_basis: supported for 3 <= n <= 5");
    SimplicialComplex Tn = enumerate_tn(n);
    auto cycles = top_cycle_basis(Tn);
    auto adm = admissible_trees(n);
    long expected = 1;
    for (int i = 2; i < n; ++i)
        expected *= i;
    if (static_cast<long>(adm.size()) != expected ||
        static_cast<long>(cycles.size()) != expected)
        return false;
    // rows: admissible facets as indices into the ordered top faces
    ChainComplexMatrices cc(Tn);
    const auto& topFaces = cc.facesByDim[Tn.dimension()];
    std::vector<int> admRows;
    for (const auto& T : adm) {
        LabelFace lf;
        for (const auto& s : tree_to_nested(T))
            lf.push_back(leafsetLabel(s));
        Face f;
        for (const auto& l : lf)
            f.push_back(Tn.vertexIndex(l));
        std::sort(f.begin(), f.end());
        auto it = std::lower_bound(topFaces.begin(), topFaces.end(), f);
        if (it == topFaces.end() || *it != f)
            return false;
        admRows.push_back(static_cast<int>(it - topFaces.begin()));
    }
    // evaluation matrix: columns = cycles restricted to admissible rows
    detail::RationalOps ops;
    std::vector<detail::SparseCol<detail::RationalOps>> cols;
    std::map<int, int> rowIndex;
    for (std::size_t i = 0; i < admRows.size(); ++i)
        rowIndex[admRows[i]] = static_cast<int>(i);
    for (const auto& z : cycles) {
        detail::SparseCol<detail::RationalOps> col;
        for (const auto& [row, val] : z) {
            auto it = rowIndex.find(row);
            if (it != rowIndex.end())
                col.emplace_back(it->second, val);
        }
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
    }
    long rank = detail::columnReduceRank(ops, std::move(cols), nullptr);
    return rank == expected;
}

}  // namespace treenest
