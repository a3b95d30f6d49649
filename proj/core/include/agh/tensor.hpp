#ifndef AGH_TENSOR_HPP
#define AGH_TENSOR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "agh/poly.hpp"
#include "agh/rational.hpp"
#include "agh/reports.hpp"

namespace agh {

/// Dense r-dimensional array of F_p residues, row-major. Hard cap of 1e7
/// entries; the verifiable scale never needs more.
class Tensor {
public:
    Tensor(FieldPrime field, std::vector<int> dims, std::vector<std::uint32_t> data);

    static Tensor fromPoly(const MultiPoly& f,
                           const std::vector<std::vector<std::uint32_t>>& V, int r,
                           std::uint64_t entryBudget = 10000000);

    const FieldPrime& field() const { return field_; }
    const std::vector<int>& dims() const { return dims_; }
    int order() const { return static_cast<int>(dims_.size()); }
    const std::vector<std::uint32_t>& data() const { return data_; }

    std::uint32_t at(std::span<const int> idx) const;

    // rank over F_p of the axis-i matricization (rows = axis i, columns =
    // lexicographic over the remaining axes), Gaussian elimination with
    // first-nonzero pivoting; axis is 0-based
    int flatteningRank(int axis) const;

    RankReport maxFlatteningRank() const;

    // all axes share one index set: zero on pairwise-distinct tuples,
    // nonzero on constant tuples
    bool semidiagonalCheck() const;

    struct SemidiagBound {
        bool holds = false;
        int mfrank = 0;
        Rational floor; // |A| / (r-1)
    };
    // precondition: semidiagonalCheck(); the floor is |A|/(r-1) and a
    // violation is reported as a red-flag finding, not an error
    SemidiagBound verifySemidiagBound() const;

private:
    std::size_t flat(std::span<const int> idx) const;

    FieldPrime field_;
    std::vector<int> dims_;
    std::vector<std::uint32_t> data_;
};

// rank of a dense matrix over F_p (rows x cols, row-major); shared by the
// tensor path and the independent test oracles
int matrixRankModP(const FieldPrime& f, std::vector<std::uint32_t> m, int rows, int cols);

} // namespace agh

#endif
