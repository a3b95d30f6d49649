#ifndef AGH_SWEEPS_HPP
#define AGH_SWEEPS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace agh {

struct SweepRow {
    std::string suite;
    std::string check;
    std::string value;
    std::string bound;
    bool pass = false;
};

// The fixed-size invariant sweeps behind `verify` and the acceptance
// criteria. Sizes are pinned here, never configurable.

// 200 random polynomial tensors, p in {5,7,13}, n<=3, d<=3, r in {2,3},
// |V|<=20: every axis rank <= C(n+d,d)
std::vector<SweepRow> sweepTensorRank(std::uint64_t seed);

// 100 random semi-diagonal tensors, r<=4, |A|<=8, p=7:
// mfrank >= ceil(|A|/(r-1))
std::vector<SweepRow> sweepSemidiagonal(std::uint64_t seed);

// exhaustive zero-pattern counts for n<=3, m<=4, d<=2 over F_3 and F_5,
// 50 families each: count <= C(md+n, n)
std::vector<SweepRow> sweepZeroPatterns(std::uint64_t seed);

// 50 single-poly dihypergraphs (r in {2,3}, n=1, d<=2, N<=12), exhaustive
// staircase search at s = C(n+d,d)+1: none(exhausted) everywhere
std::vector<SweepRow> sweepStaircaseFree(std::uint64_t seed);

// 30 strongly-algebraic instances (r in {2,3}, N<=15), exhaustive matching
// search at s = (r-1)C(n+d,d)+1: none(exhausted) everywhere
std::vector<SweepRow> sweepMatchingFree(std::uint64_t seed);

// exhaustive balanced bi-cliques of ER_q and its complement, q in {2,3,5},
// against the spectral ceiling floor(N sqrt(q)/(q+1))
std::vector<SweepRow> sweepMixing();

std::string sweepsToCsv(const std::vector<SweepRow>& rows);
bool allPass(const std::vector<SweepRow>& rows);

} // namespace agh

#endif
