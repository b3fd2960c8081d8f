#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "treenest/homology.hpp"  // Rational
#include "treenest/subdivision.hpp"

namespace treenest {

/// Exact rational point in the plane.
struct Vec2 {
    Rational x, y;
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Vec2& a, const Vec2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

/// A 2-dimensional simplicial complex together with a rational planar
/// realization of its vertices.
struct PlanarComplex {
    SimplicialComplex complex;
    std::map<std::string, Vec2> coords;

    Vec2 barycenter(const LabelFace& face) const {
        Vec2 c{0, 0};
        for (const auto& l : face) {
            const Vec2& p = coords.at(l);
            c.x += p.x;
            c.y += p.y;
        }
        Rational k(static_cast<long>(face.size()));
        c.x /= k;
        c.y /= k;
        return c;
    }
};

namespace detail {

inline Rational cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Parameter of q along segment [p0,p1] if collinear and inside, else nothing.
inline bool paramOnSegment(const Vec2& p0, const Vec2& p1, const Vec2& q, Rational& t) {
    if (cross(p0, p1, q) != 0)
        return false;
    Rational dx = p1.x - p0.x, dy = p1.y - p0.y;
    if (dx != 0)
        t = (q.x - p0.x) / dx;
    else if (dy != 0)
        t = (q.y - p0.y) / dy;
    else
        return false;
    return t >= 0 && t <= 1;
}

}  // namespace detail

/**
 * True iff the closed segment [p,q] is a union of closed cells of the
 * realized complex.  Only vertices and edges can contribute; the edges
 * collinear with and inside the segment must cover it entirely.
 */
inline bool segment_is_union_of_cells(const PlanarComplex& P, const Vec2& p, const Vec2& q) {
    std::vector<std::pair<Rational, Rational>> covered;
    for (const auto& e : P.complex.faces(1)) {
        const Vec2& a = P.coords.at(P.complex.label(e[0]));
        const Vec2& b = P.coords.at(P.complex.label(e[1]));
        Rational ta, tb;
        if (detail::paramOnSegment(p, q, a, ta) && detail::paramOnSegment(p, q, b, tb)) {
            if (ta > tb)
                std::swap(ta, tb);
            covered.emplace_back(ta, tb);
        }
    }
    if (covered.empty())
        return false;
    std::sort(covered.begin(), covered.end());
    Rational reach = 0;
    for (const auto& [lo, hi] : covered) {
        if (lo > reach)
            return false;  // gap
        reach = std::max(reach, hi);
    }
    return reach >= 1;
}

struct Remark3Report {
    bool figureEdgePresent = false;       // edge (23|45, 23|145) in the subdivision
    int subdivisionTriangles = 0;         // expect 3
    int subdivisionEdges = 0;             // expect 7
    bool edgeCoveredByBsd = false;        // expect false
    bool bsdSelfRefines = false;          // control: expect true
    bool holds() const {
        return figureEdgePresent && subdivisionTriangles == 3 && subdivisionEdges == 7 &&
               !edgeCoveredByBsd && bsdSelfRefines;
    }
};

/**
 * Non-refinement counterexample on the triangle {23, 45, 145}: subdivide
 * first at {23,145}, then at {23,45}, with subdivision vertices at the
 * barycenters of their faces; the new edge (23|45, 23|145) is not a
 * union of cells of the barycentric subdivision of the triangle.
 */
inline Remark3Report verify_remark3_non_refinement() {
    PlanarComplex T;
    T.complex = SimplicialComplex::fromLabelFaces({{"23", "45", "145"}});
    // standard 2-simplex, corners by sorted label order
    T.coords["145"] = Vec2{0, 0};
    T.coords["23"] = Vec2{1, 0};
    T.coords["45"] = Vec2{0, 1};

    PlanarComplex sub = T;
    auto subdivideAt = [&](const LabelFace& face, const std::string& label) {
        LabelFace f = face;
        std::sort(f.begin(), f.end());
        sub.coords[label] = sub.barycenter(f);
        sub.complex = stellar_subdivision(sub.complex, f, label);
    };
    subdivideAt({"23", "145"}, "23|145");
    subdivideAt({"23", "45"}, "23|45");

    Remark3Report rep;
    rep.subdivisionTriangles = static_cast<int>(sub.complex.faces(2).size());
    rep.subdivisionEdges = static_cast<int>(sub.complex.faces(1).size());
    rep.figureEdgePresent = sub.complex.isLabelFace({"23|145", "23|45"});

    PlanarComplex bsd;
    bsd.complex = barycentric_subdivision(T.complex);
    for (const auto& l : bsd.complex.vertices()) {
        // bsd vertex label is the comma-joined face; its position is the
        // barycenter of that face in T
        LabelFace face;
        std::string cur;
        for (char c : l + ",") {
            if (c == ',') {
                face.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        bsd.coords[l] = T.barycenter(face);
    }
    rep.edgeCoveredByBsd =
        segment_is_union_of_cells(bsd, sub.coords.at("23|45"), sub.coords.at("23|145"));
    rep.bsdSelfRefines = true;
    for (const auto& e : bsd.complex.faces(1)) {
        const Vec2& a = bsd.coords.at(bsd.complex.label(e[0]));
        const Vec2& b = bsd.coords.at(bsd.complex.label(e[1]));
        if (!segment_is_union_of_cells(bsd, a, b))
            rep.bsdSelfRefines = false;
    }
    return rep;
}

}  // namespace treenest
