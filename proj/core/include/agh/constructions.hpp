#ifndef AGH_CONSTRUCTIONS_HPP
#define AGH_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>

#include "agh/instance.hpp"
#include "agh/rational.hpp"

namespace agh {

// Paley-type graph on F_p (p prime, p ≡ 1 mod 4): f(x,y) = (x+y)^{(p-1)/2}+1,
// edge iff f != 0. Note the x+y rule joins x with -x as well (f = 1 there),
// so degrees are (p-1)/2 or (p+1)/2 and |E| = (p^2-1)/4.
AlgebraicInstance paley(std::uint64_t p);

// Set-intersection graph on the (p^2-1)-subsets of [n] as characteristic
// vectors over F_p: f(u,v) = <u,v> + 1, edge iff f != 0. This is the
// complement of the |A∩B| ≡ -1 (mod p) intersection-condition graph;
// complementEdges flips to that side (edge iff f = 0).
AlgebraicInstance franklWilson(int n, std::uint64_t p, bool complementEdges = false);

// Polarity graph over the projective plane of F_q (q prime), N = q^2+q+1,
// f(x,y) = x0y0+x1y1+x2y2. erSide=false gives the strongly-algebraic
// complement (edge iff f != 0); erSide=true gives the polarity graph itself
// (edge iff f = 0; self-orthogonal points keep their vertex, loops dropped).
AlgebraicInstance erPolarity(std::uint64_t q, bool erSide = false);

// N*sqrt(q)/(q+1): the spectral ceiling no balanced bi-clique on either side
// may exceed. Exact comparisons go through the squared form.
struct BicliqueCeiling {
    std::uint64_t q = 0;
    std::uint64_t N = 0;      // q^2+q+1
    double approx = 0.0;      // decimal rendering of N*sqrt(q)/(q+1)
    std::uint64_t floorValue = 0;

    // t <= N*sqrt(q)/(q+1), exactly
    bool admits(std::uint64_t t) const {
        __uint128_t lhs = (__uint128_t)t * t * (q + 1) * (q + 1);
        __uint128_t rhs = (__uint128_t)N * N * q;
        return lhs <= rhs;
    }
};
BicliqueCeiling mixingBicliqueBound(std::uint64_t q);

struct RandomInstanceParams {
    std::uint64_t p = 5;
    int n = 1, d = 2, m = 1, r = 2;
    int N = 10;
    // "strongly" (m = 1, NOT A1), "allNonzero", "anyZero", "random"
    std::string formulaShape = "strongly";
};

// Uniform random monomials under the degree cap, symmetrized by summing over
// all block permutations; rejects polynomials that vanish on all sampled
// tuples (16 redraws, then DegenerateInstance). Deterministic per seed.
AlgebraicInstance randomAlgebraic(const RandomInstanceParams& params, std::uint64_t seed);

// vertex generator used by instance files: all of F_p^n (requires p^n <= cap)
std::vector<std::vector<std::uint32_t>> allPoints(const FieldPrime& f, int n,
                                                  std::uint64_t cap = 1u << 20);

std::vector<std::vector<std::uint32_t>> randomPoints(const FieldPrime& f, int n, int count,
                                                     std::uint64_t seed);

} // namespace agh

#endif
