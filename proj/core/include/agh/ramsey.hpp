#ifndef AGH_RAMSEY_HPP
#define AGH_RAMSEY_HPP

#include <cstdint>
#include <vector>

#include "agh/edge_store.hpp"
#include "agh/io.hpp"
#include "agh/reports.hpp"

namespace agh {

// Dense-clique extraction: sample vertices at p = 1/(2N*gap^{1/(r-1)}),
// delete one vertex per surviving non-edge, retry (cap 64) until the
// (1/4)(1/gap)^{1/(r-1)} target is met; greedy max-non-degree deletion as
// the fallback. gap must satisfy 1/N^{r-1} < gap < 1/2 and d(H) >= 1-gap.
std::vector<int> denseClique(const EdgeStore& H, const Rational& gap, std::uint64_t seed,
                             bool* belowBound = nullptr);

struct MedDegreeResult {
    std::vector<int> X;            // (r-1)-set
    std::vector<int> neighborhood; // N(X), vertices
    bool boundHeld = false;        // |N(X)| <= (1 - gap/2r) M
};

// Minimum-positive-degree descent: X with 1 <= |N(X)| <= (1-gap/2r)M.
// The M >= 100r gate applies here; internal callers use the fallback path.
MedDegreeResult medDegreeSet(const EdgeStore& G, const Rational& gap);

struct MedDegreeDirResult {
    int slot = 0;                  // coordinate whose completion is small
    std::vector<int> Y;            // ordered (r-1)-tuple at the other slots
    std::vector<int> neighborhood; // completions within the vertex set
    bool boundHeld = false;        // |N| <= (1 - gap/(2r*r!)) M
};

// Directed variant: routes through medDegreeSet on [G] when the complete
// part is nonempty, otherwise scans edges for a slot with completion count
// <= (1-1/r!)M, escalating through the orientation-closure construction if
// the scan fails (a complete r-set there is InternalInconsistency).
MedDegreeDirResult medDegreeDir(const EdgeStore& diG, const Rational& gap);

struct HomogeneousResult {
    std::vector<int> U;
    std::vector<int> cliqueFor; // 1-based polynomial indices whose H_i[U] is a clique
    ExtractionTrace trace;
};

// Shrink-or-stop loop over the m polynomial dihypergraphs: returns U with
// every H_i[U] a clique or empty. sInit defaults to C(n+d,d)+1 on every
// (i,k). A greedy extension pass pads U while the contract holds.
HomogeneousResult homogeneousSubset(const AlgebraicInstance& inst, std::uint64_t seed,
                                    std::vector<std::vector<int>> sInit = {});

// Theorem-1.3-style wrapper: homogeneous subset, then the formula value on
// one orientation classifies U as clique or independent set.
RamseyResult hypergraphRamsey(const AlgebraicInstance& inst, std::uint64_t seed);

struct SparsePairResult {
    std::vector<int> A, B;
};

// Low-degree set, greedy separated net over neighborhoods, densest ball,
// A = everything off the ball center's neighborhood. Every b in B ends with
// at most crossCap*|A| neighbors in A (asserted).
SparsePairResult sparsePair(const EdgeStore& G, const Rational& gap, const Rational& crossCap);

struct WellDirectedResult {
    std::vector<int> A, B;
    bool directionAB = true;
    int steps = 0;
    Rational crossCap; // the beta actually used (after the desk-scale clamp)
};

// One-sided pair extraction in a digraph whose complete part has density
// <= 1-gap; n and d size the staircase cap s = C(n+2d,n)+1.
WellDirectedResult wellDirectedPair(const EdgeStore& diG, int n, int d, const Rational& gap,
                                    std::uint64_t seed);

// The central graph procedure: nested shrinking with well-directed pairs,
// optimistic big-jump-first backtracking, output re-verified to realize a
// single zero-pattern subset I.
RamseyResult graphRamsey(const AlgebraicInstance& inst, const Rational& beta,
                         std::uint64_t seed);

// Multicolor wrapper: the pattern class G_I is monochromatic under any
// algebraic coloring, so the returned clique maps through the color map.
RamseyResult multicolorRamsey(const AlgebraicInstance& inst, const ColorMap& colors,
                              const Rational& beta, std::uint64_t seed);

double hypergraphGamma(const AlgebraicInstance& inst);   // 2 r^2 m (C(n+d,d)+1)
double graphGammaPrime(int n, int d, int m);             // 16 m n min{d, n log d/log n}

} // namespace agh

#endif
