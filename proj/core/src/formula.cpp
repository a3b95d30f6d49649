#include "agh/formula.hpp"

namespace agh {

using nlohmann::json;

int BoolFormula::build(const json& j, int depth) {
    if (depth > 64)
        throwValidation("BadFormulaAtom", "formula tree deeper than 64");
    if (!j.is_array() || j.empty() || !j[0].is_string())
        throwValidation("BadFormulaAtom", "formula node must be [op, ...]");
    std::string op = j[0].get<std::string>();
    Node n;
    if (op == "atom") {
        if (j.size() != 2 || !j[1].is_number_integer())
            throwValidation("BadFormulaAtom", "atom needs one integer index");
        n.op = Op::Atom;
        n.a = j[1].get<int>();
        if (n.a < 1) throwValidation("BadFormulaAtom", "atom index must be >= 1");
        maxAtom_ = std::max(maxAtom_, n.a);
    } else if (op == "not") {
        if (j.size() != 2) throwValidation("BadFormulaAtom", "not needs one child");
        n.op = Op::Not;
        n.a = build(j[1], depth + 1);
    } else if (op == "and" || op == "or") {
        if (j.size() != 3) throwValidation("BadFormulaAtom", op + " needs two children");
        n.op = op == "and" ? Op::And : Op::Or;
        n.a = build(j[1], depth + 1);
        n.b = build(j[2], depth + 1);
    } else if (op == "const") {
        if (j.size() != 2 || !j[1].is_boolean())
            throwValidation("BadFormulaAtom", "const needs one boolean");
        n.op = Op::Const;
        n.value = j[1].get<bool>();
    } else {
        throwValidation("BadFormulaAtom", "unknown connective '" + op + "'");
    }
    depth_ = std::max(depth_, depth);
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
}

BoolFormula BoolFormula::parse(const json& j) {
    BoolFormula f;
    f.build(j, 1);
    return f;
}

BoolFormula BoolFormula::atom(int idx) { return parse(json::array({"atom", idx})); }

BoolFormula BoolFormula::notAtom(int idx) {
    return parse(json::array({"not", json::array({"atom", idx})}));
}

BoolFormula BoolFormula::constant(bool v) { return parse(json::array({"const", v})); }

BoolFormula BoolFormula::allNonzero(int m) {
    json j = json::array({"not", json::array({"atom", 1})});
    for (int i = 2; i <= m; ++i)
        j = json::array({"and", j, json::array({"not", json::array({"atom", i})})});
    return parse(j);
}

BoolFormula BoolFormula::anyZero(int m) {
    json j = json::array({"atom", 1});
    for (int i = 2; i <= m; ++i)
        j = json::array({"or", j, json::array({"atom", i})});
    return parse(j);
}

bool BoolFormula::eval(const std::vector<bool>& atoms) const {
    std::vector<bool> val(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        switch (n.op) {
        case Op::Atom:
            if (n.a > static_cast<int>(atoms.size()))
                throwValidation("BadFormulaAtom", "atom index exceeds polynomial count");
            val[i] = atoms[static_cast<std::size_t>(n.a) - 1];
            break;
        case Op::Not: val[i] = !val[static_cast<std::size_t>(n.a)]; break;
        case Op::And: val[i] = val[static_cast<std::size_t>(n.a)] && val[static_cast<std::size_t>(n.b)]; break;
        case Op::Or:  val[i] = val[static_cast<std::size_t>(n.a)] || val[static_cast<std::size_t>(n.b)]; break;
        case Op::Const: val[i] = n.value; break;
        }
    }
    return val.back();
}

bool BoolFormula::isNotAtom1() const {
    if (nodes_.size() != 2) return false;
    return nodes_[1].op == Op::Not && nodes_[0].op == Op::Atom && nodes_[0].a == 1;
}

json BoolFormula::nodeJson(int idx) const {
    const Node& n = nodes_[static_cast<std::size_t>(idx)];
    switch (n.op) {
    case Op::Atom: return json::array({"atom", n.a});
    case Op::Not: return json::array({"not", nodeJson(n.a)});
    case Op::And: return json::array({"and", nodeJson(n.a), nodeJson(n.b)});
    case Op::Or: return json::array({"or", nodeJson(n.a), nodeJson(n.b)});
    case Op::Const: return json::array({"const", n.value});
    }
    return {};
}

json BoolFormula::toJson() const { return nodeJson(static_cast<int>(nodes_.size()) - 1); }

} // namespace agh
