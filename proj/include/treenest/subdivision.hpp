#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "treenest/lattice.hpp"
#include "treenest/nested.hpp"
#include "treenest/simplicial_complex.hpp"

namespace treenest {

/**
 * Stellar subdivision of a face F with |F| >= 2: the star of F is
 * replaced by the cone with apex `newLabel` over the boundary of F
 * joined with the link of F.
 */
inline SimplicialComplex stellar_subdivision(const SimplicialComplex& K, const LabelFace& F,
                                             const std::string& newLabel) {
    if (F.size() < 2)
        throw std::invalid_argument("stellar_subdivision: face needs at least 2 vertices");
    if (K.vertexIndex(newLabel) >= 0)
        throw std::invalid_argument("stellar_subdivision: label collision: " + newLabel);
    if (!K.isLabelFace(F))
        throw std::invalid_argument("stellar_subdivision: not a face of the complex");
    LabelFace Fs = F;
    std::sort(Fs.begin(), Fs.end());
    std::vector<LabelFace> faces;
    for (const auto& g : K.labelFacets()) {
        if (!std::includes(g.begin(), g.end(), Fs.begin(), Fs.end())) {
            faces.push_back(g);
            continue;
        }
        LabelFace rest;  // g minus F
        std::set_difference(g.begin(), g.end(), Fs.begin(), Fs.end(),
                            std::back_inserter(rest));
        for (std::size_t drop = 0; drop < Fs.size(); ++drop) {
            LabelFace nf = rest;
            nf.push_back(newLabel);
            for (std::size_t i = 0; i < Fs.size(); ++i)
                if (i != drop)
                    nf.push_back(Fs[i]);
            std::sort(nf.begin(), nf.end());
            faces.push_back(std::move(nf));
        }
    }
    return SimplicialComplex::fromLabelFaces(faces);
}

/**
 * Barycentric subdivision: vertices are the nonempty faces of K (labels
 * joined with ','), facets the complete flags inside each facet.
 */
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& K) {
    auto faceLabel = [&](const LabelFace& f) {
        std::string s;
        for (const auto& l : f) {
            if (!s.empty())
                s += ',';
            s += l;
        }
        return s;
    };
    std::vector<LabelFace> flags;
    for (const auto& g : K.labelFacets()) {
        std::vector<std::string> perm = g;
        std::sort(perm.begin(), perm.end());
        do {
            LabelFace flag;
            LabelFace prefix;
            for (const auto& l : perm) {
                prefix.push_back(l);
                LabelFace sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                flag.push_back(faceLabel(sorted));
            }
            std::sort(flag.begin(), flag.end());
            flags.push_back(std::move(flag));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex::fromLabelFaces(flags);
}

/**
 * Ordered log of stellar subdivisions linking two complexes; replaying
 * the steps from `start` reproduces `end` exactly.
 */
struct SubdivisionTrace {
    struct Step {
        LabelFace face;        // sorted labels of the subdivided face
        std::string newVertex;
    };
    SimplicialComplex start, end;
    std::vector<Step> steps;

    SimplicialComplex replay() const {
        SimplicialComplex K = start;
        for (const auto& s : steps)
            K = stellar_subdivision(K, s.face, s.newVertex);
        return K;
    }

    /**
     * For every facet of `end`, the facet of `start` it subdivides.
     * Ancestors propagate through the replay: a facet created by
     * subdividing facet g inherits g's ancestor.
     */
    std::map<LabelFace, LabelFace> facetAncestors() const {
        SimplicialComplex K = start;
        std::map<LabelFace, LabelFace> anc;
        for (const auto& g : K.labelFacets())
            anc[g] = g;
        for (const auto& s : steps) {
            SimplicialComplex next = stellar_subdivision(K, s.face, s.newVertex);
            std::map<LabelFace, LabelFace> nextAnc;
            for (const auto& g : K.labelFacets()) {
                if (std::includes(g.begin(), g.end(), s.face.begin(), s.face.end())) {
                    LabelFace rest;
                    std::set_difference(g.begin(), g.end(), s.face.begin(), s.face.end(),
                                        std::back_inserter(rest));
                    for (std::size_t drop = 0; drop < s.face.size(); ++drop) {
                        LabelFace nf = rest;
                        nf.push_back(s.newVertex);
                        for (std::size_t i = 0; i < s.face.size(); ++i)
                            if (i != drop)
                                nf.push_back(s.face[i]);
                        std::sort(nf.begin(), nf.end());
                        nextAnc[nf] = anc.at(g);
                    }
                } else {
                    nextAnc[g] = anc.at(g);
                }
            }
            K = std::move(next);
            anc = std::move(nextAnc);
        }
        return anc;
    }
};

/**
 * The subdivision chain from the reduced minimal nested set complex of L
 * to the order complex of L: reducible proper elements are processed in
 * decreasing rank (ties by label), each one subdividing the face spanned
 * by its factors with the element itself as the new vertex.
 */
inline std::pair<SimplicialComplex, SubdivisionTrace> subdivide_to_order_complex(
    const FiniteLattice& L) {
    BuildingSet I = minimal_building_set(L);
    if (!I.contains(L.top))
        throw std::invalid_argument(
            "subdivide_to_order_complex: top element must be irreducible");
    SubdivisionTrace trace;
    trace.start = nested_set_complex(L, I, /*reduced=*/true);
    std::vector<int> reducible;
    for (int x = 0; x < L.size(); ++x)
        if (x != L.bottom && x != L.top && !I.contains(x))
            reducible.push_back(x);
    std::sort(reducible.begin(), reducible.end(), [&](int a, int b) {
        if (L.rank[a] != L.rank[b])
            return L.rank[a] > L.rank[b];
        return L.labels[a] < L.labels[b];
    });
    SimplicialComplex K = trace.start;
    for (int x : reducible) {
        LabelFace F;
        for (int f : factors(L, I, x))
            F.push_back(L.labels[f]);
        std::sort(F.begin(), F.end());
        if (!K.isLabelFace(F))
            throw std::runtime_error(
                "subdivide_to_order_complex: factor face absent at its step (order violation)");
        K = stellar_subdivision(K, F, L.labels[x]);
        trace.steps.push_back({F, L.labels[x]});
    }
    trace.end = K;
    return {K, trace};
}

}  // namespace treenest
