#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "treenest/lattice.hpp"
#include "treenest/simplicial_complex.hpp"
#include "treenest/subdivision.hpp"

namespace treenest {

using Json = nlohmann::ordered_json;

/// Canonical complex JSON: sorted vertex labels and sorted facet index
/// arrays.
inline Json complex_to_json(const SimplicialComplex& K) {
    Json j;
    j["vertices"] = K.vertices();
    std::vector<std::vector<int>> facets(K.facets().begin(), K.facets().end());
    j["facets"] = facets;
    return j;
}

/// Reader accepts vertices/facets in any order and canonicalizes.
inline SimplicialComplex complex_from_json(const Json& j) {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<LabelFace> faces;
    for (const auto& f : j.at("facets")) {
        LabelFace lf;
        for (const auto& idx : f)
            lf.push_back(vertices.at(idx.get<std::size_t>()));
        faces.push_back(std::move(lf));
    }
    for (const auto& v : vertices)
        faces.push_back({v});  // keep isolated vertices
    return SimplicialComplex::fromLabelFaces(faces);
}

inline Json lattice_to_json(const FiniteLattice& L) {
    Json j;
    j["elements"] = L.labels;
    j["bottom"] = L.bottom;
    j["top"] = L.top;
    j["rank"] = L.rank;
    j["atoms"] = L.atoms;
    j["is_lattice"] = L.hasTables;
    std::vector<std::vector<int>> covers;
    for (int x = 0; x < L.size(); ++x)
        for (int y : L.coversAbove(x))
            covers.push_back({x, y});
    j["covers"] = covers;
    return j;
}

inline Json trace_to_json(const SubdivisionTrace& t) {
    Json j;
    j["start"] = complex_to_json(t.start);
    j["end"] = complex_to_json(t.end);
    j["steps"] = Json::array();
    for (const auto& s : t.steps)
        j["steps"].push_back(Json{{"face", s.face}, {"new_vertex", s.newVertex}});
    return j;
}

}  // namespace treenest
