#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "treenest/lattice.hpp"
#include "treenest/simplicial_complex.hpp"

namespace treenest {

namespace detail {

/// Nestedness of S u {g}, assuming S itself is nested: every antichain
/// containing g of size >= 2 must have its join outside G.  Def-faithful:
/// all antichains are checked, no pairwise shortcut.
inline bool extensionStaysNested(const FiniteLattice& L, const BuildingSet& G,
                                 const std::vector<int>& S, int g) {
    std::vector<int> incomp;
    for (int s : S) {
        if (s == g)
            return false;
        if (!L.leq(s, g) && !L.leq(g, s))
            incomp.push_back(s);
    }
    // antichains A with g in A, |A| >= 2: subsets of elements of S
    // incomparable to g that are themselves pairwise incomparable
    const int m = static_cast<int>(incomp.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> A;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i))
                A.push_back(incomp[i]);
        bool antichain = true;
        for (std::size_t a = 0; a < A.size() && antichain; ++a)
            for (std::size_t b = a + 1; b < A.size() && antichain; ++b)
                if (L.leq(A[a], A[b]) || L.leq(A[b], A[a]))
                    antichain = false;
        if (!antichain)
            continue;
        int j = g;
        for (int x : A)
            j = L.join(j, x);
        if (G.contains(j))
            return false;
    }
    return true;
}

}  // namespace detail

/// True iff S (element indices) is a G-nested set.
inline bool is_nested(const FiniteLattice& L, const BuildingSet& G, std::vector<int> S) {
    std::sort(S.begin(), S.end());
    std::vector<int> built;
    for (int g : S) {
        if (!G.contains(g))
            return false;
        if (!detail::extensionStaysNested(L, G, built, g))
            return false;
        built.push_back(g);
    }
    return true;
}

/**
 * The nested set complex of L with respect to a building set G
 * containing the top element.  Unreduced, the complex is a cone with
 * apex the top; with `reduced` the top vertex is deleted from every
 * face.  Throws if G fails the building set axiom.
 */
inline SimplicialComplex nested_set_complex(const FiniteLattice& L, const BuildingSet& G,
                                            bool reduced) {
    if (L.top < 0 || !G.contains(L.top))
        throw std::invalid_argument("nested_set_complex: building set must contain the top");
    if (!is_building_set(L, G.members))
        throw std::invalid_argument("nested_set_complex: G is not a building set");
    std::vector<int> cand = G.members;  // sorted
    // DFS over nested sets; nestedness is closed under subsets, so
    // extending by candidates above the last member visits every face once
    std::vector<LabelFace> faces;
    std::vector<int> cur;
    auto emit = [&]() {
        // facet iff no single-element extension is nested
        for (int g : cand) {
            if (std::binary_search(cur.begin(), cur.end(), g))
                continue;
            if (detail::extensionStaysNested(L, G, cur, g))
                return;
        }
        std::vector<int> face = cur;
        if (reduced)
            std::erase(face, L.top);
        if (face.empty())
            return;
        LabelFace lf;
        for (int v : face)
            lf.push_back(L.labels[v]);
        faces.push_back(std::move(lf));
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        emit();
        for (std::size_t i = start; i < cand.size(); ++i) {
            if (detail::extensionStaysNested(L, G, cur, cand[i])) {
                cur.push_back(cand[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0);
    return SimplicialComplex::fromLabelFaces(faces);
}

/// Maximal nested sets of the unreduced complex, as sorted element-index
/// sets.  Unlike nested_set_complex this does not insist on the top
/// element being a member of G.
inline std::vector<std::vector<int>> maximal_nested_sets(const FiniteLattice& L,
                                                         const BuildingSet& G) {
    std::vector<int> cand = G.members;
    std::sort(cand.begin(), cand.end());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        bool maximal = true;
        for (int g : cand) {
            if (std::binary_search(cur.begin(), cur.end(), g))
                continue;
            if (detail::extensionStaysNested(L, G, cur, g)) {
                maximal = false;
                break;
            }
        }
        if (maximal && !cur.empty())
            out.push_back(cur);
        for (std::size_t i = start; i < cand.size(); ++i)
            if (detail::extensionStaysNested(L, G, cur, cand[i])) {
                cur.push_back(cand[i]);
                self(self, i + 1);
                cur.pop_back();
            }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace treenest
