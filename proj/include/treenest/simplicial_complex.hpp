#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "treenest/lattice.hpp"

namespace treenest {

using Face = std::vector<int>;          // sorted vertex indices
using LabelFace = std::vector<std::string>;  // sorted vertex labels

/**
 * Abstract simplicial complex with stable string vertex labels, stored by
 * facets.  Vertices are kept sorted by label; facets are pairwise
 * inclusion-incomparable sorted index sets.  Face membership means
 * "subset of some facet".
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Build from arbitrary faces given by vertex labels.  Non-maximal
    /// faces are dropped; vertices are collected from the faces.
    static SimplicialComplex fromLabelFaces(const std::vector<LabelFace>& faces) {
        std::set<std::string> vs;
        for (const auto& f : faces)
            for (const auto& l : f)
                vs.insert(l);
        SimplicialComplex K;
        K.vertices_.assign(vs.begin(), vs.end());
        std::map<std::string, int> idx;
        for (int i = 0; i < K.numVertices(); ++i)
            idx[K.vertices_[i]] = i;
        std::vector<Face> indexed;
        for (const auto& f : faces) {
            Face g;
            for (const auto& l : f)
                g.push_back(idx.at(l));
            std::sort(g.begin(), g.end());
            g.erase(std::unique(g.begin(), g.end()), g.end());
            if (!g.empty())
                indexed.push_back(std::move(g));
        }
        K.setFacetsFromFaces(indexed);
        return K;
    }

    int numVertices() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& label(int v) const { return vertices_[v]; }
    const std::set<Face>& facets() const { return facets_; }
    int numFacets() const { return static_cast<int>(facets_.size()); }

    int vertexIndex(const std::string& l) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), l);
        if (it == vertices_.end() || *it != l)
            return -1;
        return static_cast<int>(it - vertices_.begin());
    }

    /// Dimension: max facet size - 1; -1 for the empty complex.
    int dimension() const {
        int d = -1;
        for (const auto& f : facets_)
            d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    bool pure() const {
        if (facets_.empty())
            return true;
        std::size_t s = facets_.begin()->size();
        for (const auto& f : facets_)
            if (f.size() != s)
                return false;
        return true;
    }

    bool isFace(const Face& f) const {
        if (f.empty())
            return true;
        for (const auto& g : facets_)
            if (std::includes(g.begin(), g.end(), f.begin(), f.end()))
                return true;
        return false;
    }

    bool isLabelFace(const LabelFace& lf) const {
        Face f;
        for (const auto& l : lf) {
            int v = vertexIndex(l);
            if (v < 0)
                return false;
            f.push_back(v);
        }
        std::sort(f.begin(), f.end());
        return isFace(f);
    }

    LabelFace toLabels(const Face& f) const {
        LabelFace out;
        for (int v : f)
            out.push_back(vertices_[v]);
        return out;
    }

    /// All faces of dimension d (size d+1), sorted lexicographically.
    std::vector<Face> faces(int d) const {
        std::set<Face> out;
        for (const auto& g : facets_)
            if (static_cast<int>(g.size()) >= d + 1)
                forEachSubset(g, d + 1, [&](const Face& f) { out.insert(f); });
        return {out.begin(), out.end()};
    }

    /// f-vector: entry d = number of d-faces, d = 0..dim.
    std::vector<long> fVector() const {
        std::vector<long> f(std::max(dimension() + 1, 0), 0);
        for (int d = 0; d <= dimension(); ++d)
            f[d] = static_cast<long>(faces(d).size());
        return f;
    }

    long eulerCharacteristic() const {
        long chi = 0;
        int sign = 1;
        for (long fd : fVector()) {
            chi += sign * fd;
            sign = -sign;
        }
        return chi;
    }

    /// Facets as sorted label sets (canonical, deterministic order).
    std::vector<LabelFace> labelFacets() const {
        std::vector<LabelFace> out;
        for (const auto& f : facets_)
            out.push_back(toLabels(f));
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
    }

private:
    void setFacetsFromFaces(std::vector<Face>& faces) {
        std::sort(faces.begin(), faces.end(),
                  [](const Face& a, const Face& b) { return a.size() > b.size(); });
        for (const auto& f : faces) {
            bool contained = false;
            for (const auto& g : facets_)
                if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                    contained = true;
                    break;
                }
            if (!contained)
                facets_.insert(f);
        }
    }

    template <typename Fn>
    static void forEachSubset(const Face& g, int k, Fn&& fn) {
        Face cur;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (static_cast<int>(cur.size()) == k) {
                fn(cur);
                return;
            }
            for (std::size_t i = start; i < g.size(); ++i) {
                cur.push_back(g[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }

    std::vector<std::string> vertices_;
    std::set<Face> facets_;
};

/**
 * Equality of complexes under a vertex-label bijection (identity by
 * default): true iff the mapped facet sets coincide as sets of sets.
 */
inline bool complexes_equal(const SimplicialComplex& A, const SimplicialComplex& B,
                            const std::map<std::string, std::string>& labelMap = {}) {
    std::set<std::string> imageSeen;
    for (const auto& [k, v] : labelMap)
        if (!imageSeen.insert(v).second)
            throw std::invalid_argument("complexes_equal: label map is not injective");
    auto mapLabel = [&](const std::string& l) -> std::string {
        auto it = labelMap.find(l);
        return it == labelMap.end() ? l : it->second;
    };
    std::set<std::string> va, vb(B.vertices().begin(), B.vertices().end());
    for (const auto& l : A.vertices())
        va.insert(mapLabel(l));
    if (va != vb)
        return false;
    std::set<std::vector<std::string>> fa, fb;
    for (const auto& f : A.labelFacets()) {
        std::vector<std::string> mapped;
        for (const auto& l : f)
            mapped.push_back(mapLabel(l));
        std::sort(mapped.begin(), mapped.end());
        fa.insert(std::move(mapped));
    }
    for (const auto& f : B.labelFacets())
        fb.insert(f);
    return fa == fb;
}

/**
 * Order complex of the proper part of a bounded poset: vertices are the
 * proper-part elements, facets the maximal chains (saturated chains from
 * a minimal to a maximal proper element).  An empty proper part yields
 * the empty complex.
 */
inline SimplicialComplex order_complex(const FiniteLattice& P) {
    std::vector<int> proper = P.properPart();
    if (proper.empty())
        return SimplicialComplex{};
    std::vector<char> isProper(P.size(), 0);
    for (int x : proper)
        isProper[x] = 1;
    // covers within the proper part
    std::vector<std::vector<int>> up(P.size());
    for (int x : proper)
        for (int y : proper)
            if (P.lt(x, y)) {
                bool cover = true;
                for (int z : proper)
                    if (P.lt(x, z) && P.lt(z, y)) {
                        cover = false;
                        break;
                    }
                if (cover)
                    up[x].push_back(y);
            }
    std::vector<LabelFace> chains;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int x) -> void {
        cur.push_back(x);
        if (up[x].empty()) {
            LabelFace lf;
            for (int v : cur)
                lf.push_back(P.labels[v]);
            chains.push_back(std::move(lf));
        } else {
            for (int y : up[x])
                self(self, y);
        }
        cur.pop_back();
    };
    for (int x : proper) {
        bool minimal = true;
        for (int y : proper)
            if (P.lt(y, x)) {
                minimal = false;
                break;
            }
        if (minimal)
            rec(rec, x);
    }
    return SimplicialComplex::fromLabelFaces(chains);
}

}  // namespace treenest
