#ifndef AGH_FORBIDDEN_HPP
#define AGH_FORBIDDEN_HPP

#include <cstdint>
#include <optional>

#include "agh/edge_store.hpp"
#include "agh/witness.hpp"

namespace agh {

// Lemmas 2.3 / 5.2 are falsifiable only by exhaustive search, so "none"
// distinguishes a fully explored space from a budget stop.
enum class SearchOutcome { Found, NoneExhausted, NoneBudget };

struct PatternSearchResult {
    SearchOutcome outcome = SearchOutcome::NoneExhausted;
    std::optional<Witness> witness;
    std::uint64_t nodes = 0;

    bool found() const { return outcome == SearchOutcome::Found; }
};

// Staircase family M(r,s,k) in a directed store: rows (U_i, z_i) with
// X_{i,i} = (U_i, z_i at slot k) an edge and X_{i,i'} a non-edge for
// i < i'. k is 0-based. Depth-first over rows in lex order, no symmetry
// breaking (the family's constraints are row-order sensitive).
PatternSearchResult findMMember(const EdgeStore& diH, int s, int k, std::uint64_t budget);

// Matching family N_{r,s} in an undirected store: s disjoint labeled edges
// whose distinct-row transversals are all non-edges. Sound reductions:
// rows ordered by least vertex, first row's labeling canonical (the
// constraint set is invariant under row permutation and under one global
// position permutation).
PatternSearchResult findNMember(const EdgeStore& H, int s, std::uint64_t budget);

// Focused undirected M(r,s) w.r.t. disjoint parts: apexes z_1..z_s share
// one part, every row edge Z_i ∪ {z_i} is rainbow across r distinct parts.
PatternSearchResult findFocusedM(const EdgeStore& H,
                                 const std::vector<std::vector<int>>& parts, int s,
                                 std::uint64_t budget);

} // namespace agh

#endif
