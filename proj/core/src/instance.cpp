#include "agh/instance.hpp"

#include <algorithm>
#include <set>

#include "agh/rng.hpp"

namespace agh {

namespace {

// visit r-subsets of [N] in lex order; f returns false to stop early
template <typename F>
void forEachSubset(int N, int r, F&& f) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (r > N) return;
    while (true) {
        if (!f(idx)) return;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == N - r + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

bool orderingsAgree(const AlgebraicInstance& inst, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    bool first = true;
    bool ref = false;
    do {
        bool v = inst.edgeQuery(subset);
        if (first) { ref = v; first = false; }
        else if (v != ref) return false;
    } while (std::next_permutation(subset.begin(), subset.end()));
    return true;
}

} // namespace

void AlgebraicInstance::checkTuple(std::span<const int> tuple) const {
    if (tuple.size() != static_cast<std::size_t>(r_))
        throwValidation("ArityMismatch", "tuple arity differs from r");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= N())
            throwValidation("BadParameters", "vertex index out of range");
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] == tuple[j])
                throwValidation("RepeatedVertexInTuple", "tuple entries must be distinct");
    }
}

void AlgebraicInstance::fillPoint(std::span<const int> tuple, std::vector<std::uint32_t>& point) const {
    point.resize(static_cast<std::size_t>(r_) * n_);
    for (int b = 0; b < r_; ++b) {
        const auto& coords = vertices_[static_cast<std::size_t>(tuple[static_cast<std::size_t>(b)])];
        std::copy(coords.begin(), coords.end(), point.begin() + static_cast<std::ptrdiff_t>(b) * n_);
    }
}

std::uint32_t AlgebraicInstance::polyValue(int polyIdx, std::span<const int> tuple) const {
    checkTuple(tuple);
    std::vector<std::uint32_t> point;
    fillPoint(tuple, point);
    return polys_[static_cast<std::size_t>(polyIdx)].eval(point);
}

std::vector<bool> AlgebraicInstance::atomsAt(std::span<const int> tuple) const {
    checkTuple(tuple);
    std::vector<std::uint32_t> point;
    fillPoint(tuple, point);
    std::vector<bool> atoms(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i)
        atoms[static_cast<std::size_t>(i)] = (polys_[static_cast<std::size_t>(i)].eval(point) == 0);
    return atoms;
}

bool AlgebraicInstance::edgeQuery(std::span<const int> tuple) const {
    return formula_.eval(atomsAt(tuple));
}

bool AlgebraicInstance::diEdge(int polyIdx, std::span<const int> tuple) const {
    return polyValue(polyIdx, tuple) != 0;
}

std::vector<int> AlgebraicInstance::nonzeroPattern(std::span<const int> tuple) const {
    auto atoms = atomsAt(tuple);
    std::vector<int> nz;
    for (int i = 0; i < m_; ++i)
        if (!atoms[static_cast<std::size_t>(i)]) nz.push_back(i + 1);
    return nz;
}

AlgebraicInstance AlgebraicInstance::induced(std::span<const int> keep) const {
    AlgebraicInstance sub(field_, formula_);
    sub.r_ = r_; sub.n_ = n_; sub.d_ = d_; sub.m_ = m_;
    sub.kind_ = kind_;
    sub.polys_ = polys_;
    sub.symmetryExhaustive_ = symmetryExhaustive_;
    sub.vertices_.reserve(keep.size());
    for (int v : keep) {
        if (v < 0 || v >= N()) throwValidation("BadParameters", "induced index out of range");
        sub.vertices_.push_back(vertices_[static_cast<std::size_t>(v)]);
    }
    return sub;
}

bool symmetryCheck(const AlgebraicInstance& inst, bool* usedExhaustive,
                   std::uint64_t samples, std::uint64_t seed) {
    const int N = inst.N();
    const int r = inst.r();
    if (N < r) { if (usedExhaustive) *usedExhaustive = true; return true; }
    std::uint64_t subsets = binomial(static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(r));
    std::uint64_t fact = 1;
    for (int i = 2; i <= r; ++i) fact *= static_cast<std::uint64_t>(i);
    bool exhaustive = subsets <= 1000000ULL / fact;
    if (usedExhaustive) *usedExhaustive = exhaustive;

    if (exhaustive) {
        bool ok = true;
        forEachSubset(N, r, [&](const std::vector<int>& subset) {
            if (!orderingsAgree(inst, subset)) { ok = false; return false; }
            return true;
        });
        return ok;
    }
    Rng rng(seed);
    for (std::uint64_t t = 0; t < samples; ++t) {
        std::set<int> pick;
        while (pick.size() < static_cast<std::size_t>(r))
            pick.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(N))));
        if (!orderingsAgree(inst, std::vector<int>(pick.begin(), pick.end()))) return false;
    }
    return true;
}

AlgebraicInstance AlgebraicInstance::build(Spec spec) {
    FieldPrime field(spec.p);
    if (spec.r < 1 || spec.n < 1 || spec.m < 1 || spec.d < 0)
        throwValidation("BadParameters", "need r, n, m >= 1 and d >= 0");
    if (spec.polys.size() != static_cast<std::size_t>(spec.m))
        throwValidation("BadParameters", "polynomial count differs from m");

    if (spec.kind == InstanceKind::StronglyAlgebraic) {
        if (spec.m != 1)
            throwValidation("BadParameters", "strongly-algebraic instances have m = 1");
        if (!spec.formula) spec.formula = BoolFormula::notAtom(1);
        else if (!spec.formula->isNotAtom1())
            throwValidation("BadParameters",
                            "strongly-algebraic formula must be [\"not\",[\"atom\",1]]");
    }
    if (!spec.formula)
        throwValidation("BadFormulaAtom", "missing formula");
    if (spec.formula->maxAtom() > spec.m)
        throwValidation("BadFormulaAtom", "formula references atom beyond m");

    for (const auto& f : spec.polys) {
        if (!(f.field() == field) || f.blocks() != spec.r || f.varsPerBlock() != spec.n)
            throwValidation("ArityMismatch", "polynomial shape differs from (r, n)");
        if (f.degreeCap() > spec.d)
            throwValidation("DegreeCapViolated", "polynomial degree cap exceeds instance d");
    }

    for (const auto& v : spec.vertices) {
        if (v.size() != static_cast<std::size_t>(spec.n))
            throwValidation("BadParameters", "vertex dimension differs from n");
        for (auto c : v)
            if (c >= field.p()) throwValidation("NonResidueInput", "vertex coordinate out of range");
    }
    {
        auto sorted = spec.vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throwValidation("DuplicateVertex", "vertex list contains duplicates");
    }

    AlgebraicInstance inst(field, *spec.formula);
    inst.r_ = spec.r; inst.n_ = spec.n; inst.d_ = spec.d; inst.m_ = spec.m;
    inst.kind_ = spec.kind;
    inst.polys_ = std::move(spec.polys);
    inst.vertices_ = std::move(spec.vertices);

    bool exhaustive = true;
    if (!symmetryCheck(inst, &exhaustive, spec.symmetrySamples, spec.symmetrySeed))
        throwValidation("AsymmetricPredicate",
                        "edge predicate is not invariant under tuple permutation");
    inst.symmetryExhaustive_ = exhaustive;
    return inst;
}

} // namespace agh
