#ifndef AGH_REPORTS_HPP
#define AGH_REPORTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "agh/rational.hpp"

namespace agh {

struct RankReport {
    std::vector<int> perAxis; // frank_1 .. frank_r
    int max = 0;              // mfrank

    nlohmann::ordered_json toJson() const {
        return {{"perAxis", perAxis}, {"max", max}};
    }
};

struct Partition {
    int K = 0;
    std::vector<int> assignment; // vertex index -> part in [0, K)
    bool equitable = false;

    std::vector<std::vector<int>> parts() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(K));
        for (std::size_t v = 0; v < assignment.size(); ++v)
            out[static_cast<std::size_t>(assignment[v])].push_back(static_cast<int>(v));
        return out;
    }

    nlohmann::ordered_json toJson() const {
        return {{"K", K}, {"assignment", assignment}, {"equitable", equitable}};
    }
};

struct HomogeneityReport {
    Rational epsilon;
    std::uint64_t tuplesTotal = 0;
    std::uint64_t tuplesEmpty = 0;
    std::uint64_t tuplesDense = 0; // density >= 1 - epsilon
    std::uint64_t tuplesBad = 0;
    Rational badFraction;
    bool KBoundsOK = false; // K > 8/epsilon

    nlohmann::ordered_json toJson() const {
        return {{"epsilon", epsilon.str()},
                {"tuplesTotal", tuplesTotal},
                {"tuplesEmpty", tuplesEmpty},
                {"tuplesDense", tuplesDense},
                {"tuplesBad", tuplesBad},
                {"badFraction", badFraction.str()},
                {"KBoundsOK", KBoundsOK}};
    }
};

struct TraceStep {
    int level = 0;
    int caseId = 0;              // 1, 2, 3
    std::uint64_t uSize = 0;
    std::string bookkeeping;     // rendered s_{l,i,k} / s_{l,i} state
    std::string jumpKind = "n/a"; // small | big | n/a
};

struct ExtractionTrace {
    std::vector<TraceStep> steps;
    std::uint64_t rngSeed = 0;
    std::vector<std::string> notes; // clamps and fallbacks taken

    nlohmann::ordered_json toJson() const {
        nlohmann::ordered_json st = nlohmann::ordered_json::array();
        for (const auto& s : steps)
            st.push_back({{"level", s.level},
                          {"case", s.caseId},
                          {"uSize", s.uSize},
                          {"bookkeeping", s.bookkeeping},
                          {"jumpKind", s.jumpKind}});
        return {{"steps", st}, {"rngSeed", rngSeed}, {"notes", notes}};
    }
};

struct BoundContext {
    int N = 0;
    std::optional<double> gamma;      // hypergraph exponent 2r^2m(C(n+d,d)+1)
    std::optional<double> gammaPrime; // graph exponent 16mn*min{d, n log d/log n}
    std::optional<double> alpha;
    std::optional<double> beta;

    nlohmann::ordered_json toJson() const {
        nlohmann::ordered_json j{{"N", N}};
        if (gamma) j["gamma"] = *gamma;
        if (gammaPrime) j["gammaPrime"] = *gammaPrime;
        if (alpha) j["alpha"] = *alpha;
        if (beta) j["beta"] = *beta;
        return j;
    }
};

struct RamseyResult {
    enum class Kind { Clique, IndependentSet, MonochromaticClique };
    Kind kind = Kind::Clique;
    std::vector<int> vertices;
    std::vector<int> pattern;     // I: 1-based indices of nonvanishing polynomials
    std::optional<int> color;     // multicolor runs
    ExtractionTrace trace;
    BoundContext boundContext;
    bool verified = false;
    bool belowBound = false;      // budget exhausted, best verified set returned

    std::size_t achievedSize() const { return vertices.size(); }

    static const char* kindName(Kind k) {
        switch (k) {
        case Kind::Clique: return "clique";
        case Kind::IndependentSet: return "independentSet";
        case Kind::MonochromaticClique: return "monochromaticClique";
        }
        return "?";
    }

    nlohmann::ordered_json toJson() const {
        nlohmann::ordered_json j{{"kind", kindName(kind)},
                                 {"vertices", vertices},
                                 {"pattern", pattern},
                                 {"achievedSize", vertices.size()},
                                 {"boundContext", boundContext.toJson()},
                                 {"trace", trace.toJson()},
                                 {"verified", verified}};
        if (color) j["color"] = *color;
        if (belowBound) j["belowBound"] = true;
        return j;
    }
};

} // namespace agh

#endif
