#ifndef AGH_INSTANCE_HPP
#define AGH_INSTANCE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agh/field.hpp"
#include "agh/formula.hpp"
#include "agh/poly.hpp"

namespace agh {

enum class InstanceKind { General, StronglyAlgebraic };

/// An r-uniform (di)hypergraph presented algebraically: vertices are points
/// of F_p^n and the edge relation on r-tuples is a Boolean formula over the
/// vanishing of m polynomials evaluated at the concatenated coordinates.
class AlgebraicInstance {
public:
    struct Spec {
        std::uint64_t p = 0;
        int r = 0, n = 0, d = 0, m = 0;
        InstanceKind kind = InstanceKind::General;
        std::vector<MultiPoly> polys;
        std::optional<BoolFormula> formula;
        std::vector<std::vector<std::uint32_t>> vertices;
        std::uint64_t symmetrySeed = 0;
        std::uint64_t symmetrySamples = 10000;
        // standalone symmetry probes need instances the validator would
        // reject; everything else keeps the check on
        bool skipSymmetryCheck = false;
    };

    // validates everything: arity, degree caps, duplicate vertices, formula
    // atoms, strongly-algebraic shape, and the permutation-invariance of the
    // edge predicate (exhaustive when C(N,r)*r! <= 1e6, sampled otherwise)
    static AlgebraicInstance build(Spec spec);

    const FieldPrime& field() const { return field_; }
    int r() const { return r_; }
    int n() const { return n_; }
    int d() const { return d_; }
    int m() const { return m_; }
    InstanceKind kind() const { return kind_; }
    int N() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::vector<std::uint32_t>>& vertices() const { return vertices_; }
    const std::vector<MultiPoly>& polys() const { return polys_; }
    const BoolFormula& formula() const { return formula_; }
    bool symmetryExhaustive() const { return symmetryExhaustive_; }

    // f_i evaluated at the ordered tuple of vertex indices
    std::uint32_t polyValue(int polyIdx, std::span<const int> tuple) const;

    // atom vector [f_1 = 0, ..., f_m = 0] at the tuple
    std::vector<bool> atomsAt(std::span<const int> tuple) const;

    // the instance hypergraph's edge predicate (tuple entries must be distinct)
    bool edgeQuery(std::span<const int> tuple) const;

    // directed oracle of H_i: ordered tuple is an edge iff f_i != 0 at it
    bool diEdge(int polyIdx, std::span<const int> tuple) const;

    // zero-pattern of a pair/tuple as the set of indices i with f_i != 0
    std::vector<int> nonzeroPattern(std::span<const int> tuple) const;

    AlgebraicInstance induced(std::span<const int> keep) const;

private:
    AlgebraicInstance(FieldPrime f, BoolFormula fo) : field_(f), formula_(std::move(fo)) {}

    void checkTuple(std::span<const int> tuple) const;
    void fillPoint(std::span<const int> tuple, std::vector<std::uint32_t>& point) const;

    FieldPrime field_;
    int r_ = 0, n_ = 0, d_ = 0, m_ = 0;
    InstanceKind kind_ = InstanceKind::General;
    std::vector<MultiPoly> polys_;
    BoolFormula formula_;
    std::vector<std::vector<std::uint32_t>> vertices_;
    bool symmetryExhaustive_ = true;
};

// Standalone symmetry probe: true iff the edge predicate agrees on all r!
// orderings of every tested r-subset. Exhaustive when subsets*r! <= 1e6,
// else `samples` random subsets drawn from `seed`.
bool symmetryCheck(const AlgebraicInstance& inst, bool* usedExhaustive = nullptr,
                   std::uint64_t samples = 10000, std::uint64_t seed = 0);

} // namespace agh

#endif
