#ifndef AGH_EDGE_STORE_HPP
#define AGH_EDGE_STORE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "agh/bitset.hpp"
#include "agh/instance.hpp"
#include "agh/rational.hpp"

namespace agh {

/// Materialized (di)hypergraph. Ordered-tuple bitsets for r <= 3 (a row
/// per vertex at r = 2, a flat cube at r = 3); sorted tuple lists above.
class EdgeStore {
public:
    static EdgeStore materialize(const AlgebraicInstance& inst, std::uint64_t budget);
    static EdgeStore materializeDi(const AlgebraicInstance& inst, int polyIdx,
                                   std::uint64_t budget);

    // explicit constructions (tests, auxiliary graphs)
    static EdgeStore fromSets(int r, int N, const std::vector<std::vector<int>>& sets);
    static EdgeStore fromTuples(int r, int N, const std::vector<std::vector<int>>& tuples);
    static EdgeStore completeGraph(int N);
    static EdgeStore empty(int r, int N, bool directed);

    int r() const { return r_; }
    int N() const { return N_; }
    bool directed() const { return directed_; }

    // ordered membership; entries must be distinct and in range
    bool hasTuple(std::span<const int> tuple) const;
    // unordered membership (undirected stores)
    bool hasSet(std::span<const int> set) const;

    // number of unordered edges (undirected) resp. ordered tuples (directed)
    std::uint64_t edgeCount() const;

    // [H]: the undirected hypergraph of complete edges of a dihypergraph
    EdgeStore completePart() const;

    // graph complement on distinct pairs (r = 2 only)
    EdgeStore complement() const;

    EdgeStore inducedSub(std::span<const int> keep) const;

    // density across an r-tuple of disjoint nonempty parts, exact
    Rational partDensity(const std::vector<std::vector<int>>& parts) const;

    // d(H) = |E| / C(N, r) (undirected)
    Rational globalDensity() const;
    Rational densityWithin(std::span<const int> U) const;
    std::uint64_t edgesWithin(std::span<const int> U) const;

    // directed I-neighborhood: completions at positions not in I, in
    // increasing position order; positions are 0-based and sorted
    std::vector<std::vector<int>> dirNeighborhood(std::span<const int> positions,
                                                  std::span<const int> X) const;
    // undirected N(X): (r-|X|)-subsets completing X to an edge
    std::vector<std::vector<int>> setNeighborhood(std::span<const int> X) const;

    // r = 2 helpers
    const DynBitset& adjOut(int v) const;   // row of v (adjacency if undirected)
    DynBitset adjIn(int v) const;

    void addTupleUnchecked(std::span<const int> tuple); // tests/builders

private:
    EdgeStore() = default;
    void init(int r, int N, bool directed);
    std::size_t flatIndex(std::span<const int> tuple) const;
    void checkTuple(std::span<const int> tuple) const;
    void setAllOrderings(std::span<const int> set);

    int r_ = 0;
    int N_ = 0;
    bool directed_ = false;
    std::vector<DynBitset> rows_;            // r = 2
    DynBitset cube_;                         // r = 3
    std::vector<std::vector<int>> tuples_;   // r >= 4, sorted
    std::uint64_t edgeCount_ = 0;
};

// disjointness/nonemptiness checks for part tuples
void validateParts(const std::vector<std::vector<int>>& parts, int N);

} // namespace agh

#endif
