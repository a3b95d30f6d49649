#ifndef AGH_FORMULA_HPP
#define AGH_FORMULA_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "agh/errors.hpp"

namespace agh {

/// Boolean formula over the atoms A_1..A_m, where atom A_i reads
/// "polynomial f_i vanishes at the tuple". Stored as a flat node tree.
class BoolFormula {
public:
    enum class Op { Atom, Not, And, Or, Const };

    struct Node {
        Op op;
        int a = -1;        // child / atom index (1-based for atoms)
        int b = -1;        // second child for And/Or
        bool value = false; // for Const
    };

    // ["not",["atom",1]], ["and",X,Y], ["or",X,Y], ["atom",k], ["const",true]
    static BoolFormula parse(const nlohmann::json& j);

    static BoolFormula atom(int idx);
    static BoolFormula notAtom(int idx); // edge iff f_idx != 0
    static BoolFormula constant(bool v);
    static BoolFormula allNonzero(int m); // AND over NOT(A_i)
    static BoolFormula anyZero(int m);    // OR over A_i

    bool eval(const std::vector<bool>& atoms) const;

    int maxAtom() const { return maxAtom_; }
    int depth() const { return depth_; }

    // true iff this is literally NOT(A_1) (the strongly-algebraic shape)
    bool isNotAtom1() const;

    nlohmann::json toJson() const;

private:
    int build(const nlohmann::json& j, int depth);
    nlohmann::json nodeJson(int idx) const;

    std::vector<Node> nodes_; // nodes_.back() is the root
    int maxAtom_ = 0;
    int depth_ = 0;
};

} // namespace agh

#endif
