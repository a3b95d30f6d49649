#ifndef AGH_POLY_HPP
#define AGH_POLY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "agh/field.hpp"

namespace agh {

struct Monomial {
    std::uint32_t coeff;             // in [1, p-1]
    std::vector<std::uint16_t> exps; // length blocks * varsPerBlock
};

/// Sparse multivariate polynomial over F_p in r blocks of n variables.
/// Degree is capped per block: inside each block the exponent sum of every
/// monomial is at most d. This is the degree notion all rank and
/// zero-pattern bounds are stated against.
class MultiPoly {
public:
    MultiPoly(FieldPrime field, int blocks, int varsPerBlock, int degreeCap,
              std::vector<Monomial> monomials);

    static MultiPoly zero(FieldPrime field, int blocks, int varsPerBlock, int degreeCap);

    const FieldPrime& field() const { return field_; }
    int blocks() const { return blocks_; }
    int varsPerBlock() const { return varsPerBlock_; }
    int vars() const { return blocks_ * varsPerBlock_; }
    int degreeCap() const { return degreeCap_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool isZero() const { return monomials_.empty(); }

    std::uint32_t eval(std::span<const std::uint32_t> point) const;

    MultiPoly add(const MultiPoly& o) const;
    MultiPoly mul(const MultiPoly& o, int degreeCapOut) const;

    // relabel blocks: block j of the result reads the variables block perm[j]
    // of this polynomial's monomials (used both for symmetrization and for
    // the swapped-argument product f(x,y)*f(y,x)).
    MultiPoly permuteBlocks(std::span<const int> perm) const;

private:
    void validate() const;
    void sortAndCombine();

    FieldPrime field_;
    int blocks_;
    int varsPerBlock_;
    int degreeCap_;
    std::vector<Monomial> monomials_;
};

// C(n+d, d): number of monomials in n variables of total degree <= d.
// Checked arithmetic, throws Overflow instead of wrapping.
std::uint64_t monomialCount(int n, int d);

// C(n, k) with the same overflow discipline.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace agh

#endif
