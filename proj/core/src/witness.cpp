#include "agh/witness.hpp"

#include <set>

namespace agh {

const char* Witness::kindName(Kind k) {
    switch (k) {
    case Kind::Clique: return "clique";
    case Kind::IndependentSet: return "independentSet";
    case Kind::Biclique: return "biclique";
    case Kind::WellDirected: return "wellDirectedPair";
    case Kind::MPattern: return "mPattern";
    case Kind::NPattern: return "nPattern";
    case Kind::FocusedM: return "focusedMPattern";
    case Kind::Monochromatic: return "monochromaticClique";
    }
    return "?";
}

nlohmann::ordered_json Witness::toJson(const AlgebraicInstance& inst) const {
    nlohmann::ordered_json j;
    j["kind"] = kindName(kind);
    std::set<int> referenced;
    auto addSet = [&](const char* key, const std::vector<int>& vs) {
        if (vs.empty()) return;
        j[key] = vs;
        referenced.insert(vs.begin(), vs.end());
    };
    addSet("vertices", vertices);
    addSet("sideA", sideA);
    addSet("sideB", sideB);
    if (kind == Kind::WellDirected) {
        j["direction"] = directionAB ? "A->B" : "B->A";
        j["diPolyIdx"] = diPolyIdx + 1;
    }
    if (kind == Kind::MPattern) {
        j["k"] = coordinate + 1;
        j["diPolyIdx"] = diPolyIdx + 1;
    }
    if (kind == Kind::MPattern || kind == Kind::FocusedM) {
        nlohmann::ordered_json rws = nlohmann::ordered_json::array();
        for (const auto& [U, z] : rows) {
            rws.push_back({{"U", U}, {"z", z}});
            referenced.insert(U.begin(), U.end());
            referenced.insert(z);
        }
        j["rows"] = rws;
    }
    if (kind == Kind::NPattern) {
        j["edges"] = labeledEdges;
        for (const auto& e : labeledEdges) referenced.insert(e.begin(), e.end());
    }
    if (!parts.empty()) j["parts"] = parts;
    if (color) j["color"] = *color;

    nlohmann::ordered_json coords = nlohmann::ordered_json::object();
    for (int v : referenced)
        coords[std::to_string(v)] = inst.vertices()[static_cast<std::size_t>(v)];
    j["coordinates"] = coords;
    return j;
}

} // namespace agh
