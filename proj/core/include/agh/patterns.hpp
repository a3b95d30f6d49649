#ifndef AGH_PATTERNS_HPP
#define AGH_PATTERNS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "agh/bitset.hpp"
#include "agh/edge_store.hpp"
#include "agh/instance.hpp"
#include "agh/rational.hpp"

namespace agh {

struct ZeroPatternResult {
    std::set<std::string> patterns; // strings over {'0','*'}, index i = f_{i+1}
    std::uint64_t count = 0;
    std::uint64_t bound = 0;        // C(md+n, n)
    bool withinBound = false;       // violation = red-flag finding
};

// Realized zero-patterns of m polynomials in n variables over the given
// domain points (empty domain vector = all of F_p^n).
ZeroPatternResult zeroPatterns(const std::vector<MultiPoly>& polys,
                               const std::vector<std::vector<std::uint32_t>>& domain,
                               std::uint64_t budget = 10000000);
ZeroPatternResult zeroPatternsAll(const std::vector<MultiPoly>& polys,
                                  std::uint64_t budget = 10000000);

struct SetFamily {
    int baseSize = 0;
    std::vector<DynBitset> members;
};

// exact max over z-subsets U of the base of |{A ∩ U : A in family}|
std::uint64_t shatterFunction(const SetFamily& family, int z, std::uint64_t budget = 10000000);

struct WeakVcRow {
    int z = 0;
    std::uint64_t shatter = 0;
    std::uint64_t bound = 0; // C(zmd+n, n)
    bool withinBound = false;
};

// Neighborhood family of the instance hypergraph over the base V(H)^(r-1)
// (unordered (r-1)-subsets for r >= 3), with the zero-pattern ceiling
// alongside each exact value.
std::vector<WeakVcRow> weakVcReport(const AlgebraicInstance& inst, int zMax,
                                    std::uint64_t budget = 10000000);

SetFamily neighborhoodFamily(const EdgeStore& undirected);

// Greedy maximal delta-separated subfamily, scanning members in index
// order; pairwise symmetric difference >= delta * baseSize, exact compare.
std::vector<int> separatedPacking(const SetFamily& family, const Rational& delta);

} // namespace agh

#endif
