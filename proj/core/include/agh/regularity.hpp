#ifndef AGH_REGULARITY_HPP
#define AGH_REGULARITY_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "agh/edge_store.hpp"
#include "agh/reports.hpp"
#include "agh/witness.hpp"

namespace agh {

HomogeneityReport homogeneityReport(const EdgeStore& H, const Partition& part,
                                    const Rational& eps);

struct PartitionOutcome {
    Partition partition;
    HomogeneityReport report;
    bool ok = false;
    int rounds = 0; // net-refinement rounds consumed
};

// Equitable partition via a separated net over vertex neighborhoods:
// cluster to the nearest center, split clusters equitably, verify with a
// homogeneity report, halving the net separation on failure (<= 8 rounds).
// Returns the best round; ok means badFraction <= eps and K > 8/eps.
PartitionOutcome weakVcPartition(const EdgeStore& H, const Rational& eps, std::uint64_t seed);

// pipeline variant: homogeneity verified against homogTarget while the
// part-count floor comes from the caller (the final-epsilon contract)
PartitionOutcome weakVcPartitionCore(const EdgeStore& H, const Rational& homogTarget,
                                     std::uint64_t seed, int kMin);

struct SparseMedResult {
    int cls = 0;                   // class index whose completion set is small
    std::vector<int> X;            // one vertex from every other class
    std::vector<int> neighborhood; // completions inside class `cls`
};

// r-partite minimum-degree descent: 1 <= |N(X)| <= eps^{1/r} |W_cls|,
// exact power comparisons throughout.
SparseMedResult medDegreeSparse(const EdgeStore& H,
                                const std::vector<std::vector<int>>& classes,
                                const Rational& eps);

struct CleaningResult {
    std::vector<std::vector<int>> trimmed; // V_i ⊆ U_i
    double targetFraction = 0.0;           // c(r,s) * eps0^{1/r!}, reported
    bool sizeTargetMet = true;
};

// Lemma-4.3-style trimming: unions of small co-neighborhoods (T_k) and
// heavy (r-1)-tuples (F_{X,k}) are peeled, recursing on the heavy tuples
// for r >= 3. Hard contract, asserted unconditionally: zero edges across
// every sparse tuple of the trimmed parts. Size shortfall is reported.
CleaningResult cleaning(const EdgeStore& H, const std::vector<std::vector<int>>& parts,
                        const std::vector<std::vector<int>>& sparseTuples,
                        const Rational& eps0, int s);

struct RegularityOutcome {
    Partition partition;
    HomogeneityReport report;
    bool ok = false;
    int attempts = 0;
    double eps0 = 0.0;
};

// Theorem-1.4 pipeline: weak-VC partition at eps0, cleaning of sparse
// tuples, re-equitabilization to minimal K with N/K < min |V'_i|; the
// output contract (badFraction <= eps, K > 8/eps) is re-verified on the
// final report; up to 4 internal retries with fresh seeds.
RegularityOutcome algebraicRegularity(const AlgebraicInstance& inst, const Rational& eps,
                                      std::uint64_t seed);

struct BaseFinderResult {
    bool isClique = false;
    std::vector<int> vertices; // indices into the subinstance handed over
};
using BaseFinder = std::function<BaseFinderResult(const AlgebraicInstance&)>;

struct AmplifyOutcome {
    Witness witness;
    int K = 0;
    int resamples = 0;
    bool viaClique = false;
};

// Theorem-5.3 amplification: regularity partition, one sampled vertex per
// part, auxiliary agreement graph, dense clique there, base finder on the
// induced subinstance; an IS of size (r-1)C(n+d,d)+1 forces one fully
// independent part.
AmplifyOutcome hereditaryAmplify(const AlgebraicInstance& inst, const BaseFinder& baseFinder,
                                 const Rational& beta, std::uint64_t seed);

// exact-oracle base finder: an IS of size >= sTarget when one exists,
// otherwise the maximum clique
BaseFinder exactOracleBaseFinder(int sTarget);

} // namespace agh

#endif
