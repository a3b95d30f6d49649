#ifndef AGH_IO_HPP
#define AGH_IO_HPP

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "agh/instance.hpp"

namespace agh {

/// Coloring of realized zero-patterns (multicolor runs). Patterns are
/// strings over {'0','*'} of length m, position i telling whether f_{i+1}
/// vanishes. When no explicit map is given the pattern's binary encoding
/// (+1) serves as its color, which is always total.
struct ColorMap {
    int t = 0;                          // number of colors, 0 = implicit
    std::map<std::string, int> table;

    static std::string patternString(const std::vector<bool>& atoms) {
        std::string s;
        s.reserve(atoms.size());
        for (bool a : atoms) s.push_back(a ? '0' : '*');
        return s;
    }

    int colorOf(const std::vector<bool>& atoms) const;
};

struct LoadedInstance {
    AlgebraicInstance instance;
    std::optional<ColorMap> colorMap;
};

// Instance file schema: {p, r, n, d, m, kind, polys, formula,
// vertices | vertexGenerator, colorMap?}. Polynomials are monomial lists
// {"c": coeff, "e": [exponents; r*n]}; formulas nested arrays like
// ["not",["atom",1]]. vertexGenerator.name in {all, paley, franklWilson,
// erPolarity, randomSubset}; the three canonical constructions define the
// whole instance and ignore the remaining keys.
LoadedInstance loadInstance(const nlohmann::json& j);
LoadedInstance loadInstanceFile(const std::string& path);

nlohmann::ordered_json instanceSummary(const AlgebraicInstance& inst,
                                       std::optional<std::uint64_t> edgeCount);

// canonical serialized form (for gen subcommands)
nlohmann::ordered_json instanceToJson(const AlgebraicInstance& inst);

} // namespace agh

#endif
