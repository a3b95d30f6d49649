#include "agh/io.hpp"

#include <fstream>

#include "agh/constructions.hpp"

namespace agh {

using nlohmann::json;

int ColorMap::colorOf(const std::vector<bool>& atoms) const {
    std::string key = patternString(atoms);
    if (!table.empty()) {
        auto it = table.find(key);
        if (it == table.end())
            throwValidation("ColorMapIncomplete",
                            "color map has no entry for realized pattern " + key);
        return it->second;
    }
    int v = 0;
    for (bool a : atoms) v = v * 2 + (a ? 0 : 1);
    return v + 1;
}

namespace {

MultiPoly polyFromJson(const FieldPrime& f, int r, int n, int d, const json& j) {
    if (!j.is_array()) throwValidation("BadParameters", "polynomial must be a monomial list");
    std::vector<Monomial> ms;
    for (const auto& mj : j) {
        Monomial m;
        std::int64_t c = mj.at("c").get<std::int64_t>();
        m.coeff = f.reduce(c);
        for (const auto& e : mj.at("e")) m.exps.push_back(e.get<std::uint16_t>());
        ms.push_back(std::move(m));
    }
    return MultiPoly(f, r, n, d, std::move(ms));
}

std::optional<ColorMap> colorMapFromJson(const json& j) {
    if (!j.contains("colorMap")) return std::nullopt;
    ColorMap cm;
    const auto& cj = j.at("colorMap");
    cm.t = cj.value("t", 0);
    if (cj.contains("map"))
        for (const auto& [pat, col] : cj.at("map").items())
            cm.table[pat] = col.get<int>();
    return cm;
}

} // namespace

LoadedInstance loadInstance(const json& j) {
    if (j.contains("vertexGenerator")) {
        const auto& g = j.at("vertexGenerator");
        std::string name = g.at("name").get<std::string>();
        if (name == "paley")
            return {paley(g.at("p").get<std::uint64_t>()), colorMapFromJson(j)};
        if (name == "franklWilson")
            return {franklWilson(g.at("n").get<int>(), g.at("p").get<std::uint64_t>(),
                                 g.value("complement", false)),
                    colorMapFromJson(j)};
        if (name == "erPolarity")
            return {erPolarity(g.at("q").get<std::uint64_t>(),
                               g.value("side", std::string("complement")) == "er"),
                    colorMapFromJson(j)};
        if (name != "all" && name != "randomSubset")
            throwValidation("BadParameters", "unknown vertexGenerator '" + name + "'");
    }

    AlgebraicInstance::Spec spec;
    spec.p = j.at("p").get<std::uint64_t>();
    spec.r = j.at("r").get<int>();
    spec.n = j.at("n").get<int>();
    spec.d = j.at("d").get<int>();
    spec.m = j.at("m").get<int>();
    std::string kind = j.value("kind", std::string("general"));
    if (kind == "stronglyAlgebraic") spec.kind = InstanceKind::StronglyAlgebraic;
    else if (kind == "general") spec.kind = InstanceKind::General;
    else throwValidation("BadParameters", "kind must be general or stronglyAlgebraic");

    FieldPrime f(spec.p);
    for (const auto& pj : j.at("polys"))
        spec.polys.push_back(polyFromJson(f, spec.r, spec.n, spec.d, pj));
    if (j.contains("formula")) spec.formula = BoolFormula::parse(j.at("formula"));

    if (j.contains("vertices")) {
        for (const auto& vj : j.at("vertices")) {
            std::vector<std::uint32_t> v;
            for (const auto& c : vj) v.push_back(f.reduce(c.get<std::int64_t>()));
            spec.vertices.push_back(std::move(v));
        }
    } else if (j.contains("vertexGenerator")) {
        const auto& g = j.at("vertexGenerator");
        std::string name = g.at("name").get<std::string>();
        if (name == "all") {
            spec.vertices = allPoints(f, spec.n);
        } else { // randomSubset
            spec.vertices = randomPoints(f, spec.n, g.at("count").get<int>(),
                                         g.value("seed", std::uint64_t{0}));
        }
    } else {
        throwValidation("BadParameters", "instance needs vertices or vertexGenerator");
    }
    return {AlgebraicInstance::build(std::move(spec)), colorMapFromJson(j)};
}

LoadedInstance loadInstanceFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throwUsage("FileNotFound", "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throwValidation("BadJson", std::string("parse error: ") + e.what());
    }
    return loadInstance(j);
}

nlohmann::ordered_json instanceSummary(const AlgebraicInstance& inst,
                                       std::optional<std::uint64_t> edgeCount) {
    nlohmann::ordered_json j{
        {"N", inst.N()},
        {"r", inst.r()},
        {"n", inst.n()},
        {"d", inst.d()},
        {"m", inst.m()},
        {"kind", inst.kind() == InstanceKind::StronglyAlgebraic ? "stronglyAlgebraic" : "general"},
        {"symmetryMode", inst.symmetryExhaustive() ? "exhaustive" : "sampled"}};
    if (edgeCount) j["edgeCount"] = *edgeCount;
    return j;
}

nlohmann::ordered_json instanceToJson(const AlgebraicInstance& inst) {
    nlohmann::ordered_json j;
    j["p"] = inst.field().p();
    j["r"] = inst.r();
    j["n"] = inst.n();
    j["d"] = inst.d();
    j["m"] = inst.m();
    j["kind"] = inst.kind() == InstanceKind::StronglyAlgebraic ? "stronglyAlgebraic" : "general";
    nlohmann::ordered_json polys = nlohmann::ordered_json::array();
    for (const auto& f : inst.polys()) {
        nlohmann::ordered_json pj = nlohmann::ordered_json::array();
        for (const auto& m : f.monomials())
            pj.push_back({{"c", m.coeff}, {"e", m.exps}});
        polys.push_back(pj);
    }
    j["polys"] = polys;
    j["formula"] = inst.formula().toJson();
    j["vertices"] = inst.vertices();
    return j;
}

} // namespace agh
