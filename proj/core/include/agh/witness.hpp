#ifndef AGH_WITNESS_HPP
#define AGH_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "agh/instance.hpp"

namespace agh {

/// Tagged result of an extraction or search. Witnesses speak in vertex
/// indices; serialization attaches the coordinate vectors so a reader can
/// re-verify without the original vertex file.
struct Witness {
    enum class Kind {
        Clique,
        IndependentSet,
        Biclique,
        WellDirected,
        MPattern,       // staircase family M(r,s,k), directed
        NPattern,       // matching family N_{r,s}, undirected
        FocusedM,       // focused undirected M(r,s) w.r.t. parts
        Monochromatic
    };

    Kind kind = Kind::Clique;
    std::vector<int> vertices;                          // clique / IS / monochromatic
    std::vector<int> sideA, sideB;                      // biclique, well-directed
    bool directionAB = true;                            // well-directed: edges A -> B
    int diPolyIdx = 0;                                  // which digraph (0-based poly)
    int coordinate = 0;                                 // M(r,s,k): k, 0-based
    std::vector<std::pair<std::vector<int>, int>> rows; // M/FocusedM: (U_i or Z_i, z_i)
    std::vector<std::vector<int>> labeledEdges;         // NPattern: u_{i,1..r}
    std::vector<std::vector<int>> parts;                // FocusedM context
    std::optional<int> color;                           // monochromatic

    static const char* kindName(Kind k);
    nlohmann::ordered_json toJson(const AlgebraicInstance& inst) const;
};

struct VerifyResult {
    bool ok = true;
    std::string detail; // first counterexample, empty when ok
};

} // namespace agh

#endif
