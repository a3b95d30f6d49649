#ifndef AGH_ORACLES_HPP
#define AGH_ORACLES_HPP

#include <cstdint>
#include <optional>

#include "agh/edge_store.hpp"
#include "agh/io.hpp"
#include "agh/reports.hpp"
#include "agh/witness.hpp"

namespace agh {

struct ExactResult {
    int size = 0;
    std::vector<int> witness; // lexicographically first optimum
    std::uint64_t nodes = 0;
};

// Exact maximum clique. r = 2: bitset branch and bound with a greedy
// coloring bound, N <= 64. r >= 3: recursive lex-order enumeration,
// N <= 30. Budgets count search nodes, not wall time.
ExactResult maxCliqueExact(const EdgeStore& H, std::uint64_t budget = 50000000,
                           bool reverseOrder = false);

ExactResult maxIndependentExact(const EdgeStore& H, std::uint64_t budget = 50000000,
                                bool reverseOrder = false);

struct BicliqueResult {
    int t = 0;
    std::vector<int> sideA, sideB;
    std::uint64_t nodes = 0;
};

// Largest balanced bi-clique (|A| = |B| = t, disjoint, complete across),
// exhaustive over A-sets with intersection pruning; N <= 36.
BicliqueResult maxBalancedBicliqueExact(const EdgeStore& G, std::uint64_t budget = 200000000);

// Re-derives every claimed property from raw edge_query calls only; the
// stores used by the searches are never consulted. First counterexample
// goes into detail.
VerifyResult verifyWitness(const AlgebraicInstance& inst, const Witness& w,
                           const std::optional<ColorMap>& colors = std::nullopt);

VerifyResult verifyRamseyResult(const AlgebraicInstance& inst, const RamseyResult& res,
                                const std::optional<ColorMap>& colors = std::nullopt);

} // namespace agh

#endif
