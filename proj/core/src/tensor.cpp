#include "agh/tensor.hpp"

namespace agh {

Tensor::Tensor(FieldPrime field, std::vector<int> dims, std::vector<std::uint32_t> data)
    : field_(field), dims_(std::move(dims)), data_(std::move(data)) {
    std::uint64_t need = 1;
    for (int d : dims_) {
        if (d < 1) throwValidation("BadParameters", "tensor axis length must be >= 1");
        need *= static_cast<std::uint64_t>(d);
        if (need > 10000000ULL) throwBudget("BudgetExceeded", "tensor exceeds the 1e7 entry cap");
    }
    if (data_.size() != need)
        throwValidation("BadParameters", "tensor data length differs from product of dims");
    for (auto v : data_)
        if (v >= field_.p()) throwValidation("NonResidueInput", "tensor entry out of range");
}

std::size_t Tensor::flat(std::span<const int> idx) const {
    std::size_t f = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= dims_[i])
            throwValidation("BadParameters", "tensor index out of range");
        f = f * static_cast<std::size_t>(dims_[i]) + static_cast<std::size_t>(idx[i]);
    }
    return f;
}

std::uint32_t Tensor::at(std::span<const int> idx) const { return data_[flat(idx)]; }

Tensor Tensor::fromPoly(const MultiPoly& f, const std::vector<std::vector<std::uint32_t>>& V,
                        int r, std::uint64_t entryBudget) {
    if (f.blocks() != r) throwValidation("ArityMismatch", "polynomial block count differs from r");
    const int n = f.varsPerBlock();
    const std::size_t N = V.size();
    std::uint64_t need = 1;
    for (int i = 0; i < r; ++i) {
        need *= N;
        if (need > entryBudget)
            throwBudget("BudgetExceeded", "|V|^r exceeds the tensor entry budget");
    }
    std::vector<std::uint32_t> data(need);
    std::vector<int> idx(static_cast<std::size_t>(r), 0);
    std::vector<std::uint32_t> point(static_cast<std::size_t>(r) * n);
    for (std::size_t flatIdx = 0;; ++flatIdx) {
        for (int b = 0; b < r; ++b)
            std::copy(V[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])].begin(),
                      V[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])].end(),
                      point.begin() + static_cast<std::ptrdiff_t>(b) * n);
        data[flatIdx] = f.eval(point);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] + 1 == static_cast<int>(N)) {
            idx[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
    }
    return Tensor(f.field(), std::vector<int>(static_cast<std::size_t>(r), static_cast<int>(N)),
                  std::move(data));
}

int matrixRankModP(const FieldPrime& f, std::vector<std::uint32_t> m, int rows, int cols) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int row = rank; row < rows; ++row) {
            if (m[static_cast<std::size_t>(row) * cols + col] != 0) { pivot = row; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < cols; ++c)
                std::swap(m[static_cast<std::size_t>(pivot) * cols + c],
                          m[static_cast<std::size_t>(rank) * cols + c]);
        std::uint32_t inv = f.inv(m[static_cast<std::size_t>(rank) * cols + col]);
        for (int row = rank + 1; row < rows; ++row) {
            std::uint32_t factor = m[static_cast<std::size_t>(row) * cols + col];
            if (factor == 0) continue;
            std::uint32_t scale = f.mul(factor, inv);
            for (int c = col; c < cols; ++c) {
                auto& cell = m[static_cast<std::size_t>(row) * cols + c];
                cell = f.sub(cell, f.mul(scale, m[static_cast<std::size_t>(rank) * cols + c]));
            }
        }
        ++rank;
    }
    return rank;
}

int Tensor::flatteningRank(int axis) const {
    const int r = order();
    if (axis < 0 || axis >= r) throwValidation("BadParameters", "axis out of range");
    const int rows = dims_[static_cast<std::size_t>(axis)];
    std::size_t cols = data_.size() / static_cast<std::size_t>(rows);
    std::vector<std::uint32_t> m(data_.size());
    // columns: lexicographic over the remaining axes in increasing axis order
    std::vector<int> idx(static_cast<std::size_t>(r), 0);
    for (std::size_t flatIdx = 0; flatIdx < data_.size(); ++flatIdx) {
        std::size_t row = static_cast<std::size_t>(idx[static_cast<std::size_t>(axis)]);
        std::size_t col = 0;
        for (int a = 0; a < r; ++a) {
            if (a == axis) continue;
            col = col * static_cast<std::size_t>(dims_[static_cast<std::size_t>(a)]) +
                  static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
        }
        m[row * cols + col] = data_[flatIdx];
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] + 1 == dims_[static_cast<std::size_t>(i)]) {
            idx[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
    }
    return matrixRankModP(field_, std::move(m), rows, static_cast<int>(cols));
}

RankReport Tensor::maxFlatteningRank() const {
    RankReport rep;
    for (int a = 0; a < order(); ++a) rep.perAxis.push_back(flatteningRank(a));
    rep.max = *std::max_element(rep.perAxis.begin(), rep.perAxis.end());
    return rep;
}

bool Tensor::semidiagonalCheck() const {
    const int r = order();
    for (int d : dims_)
        if (d != dims_[0]) throwValidation("AxisMismatch", "axes must share one index set");
    const int A = dims_[0];
    std::vector<int> idx(static_cast<std::size_t>(r), 0);
    for (std::size_t flatIdx = 0; flatIdx < data_.size(); ++flatIdx) {
        bool allEqual = true;
        bool allDistinct = true;
        for (int i = 0; i < r && (allEqual || allDistinct); ++i)
            for (int j = i + 1; j < r; ++j) {
                if (idx[static_cast<std::size_t>(i)] == idx[static_cast<std::size_t>(j)]) allDistinct = false;
                else allEqual = false;
            }
        if (allDistinct && r >= 2 && data_[flatIdx] != 0) return false;
        if (allEqual && data_[flatIdx] == 0) return false;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] + 1 == A) {
            idx[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
    }
    return true;
}

Tensor::SemidiagBound Tensor::verifySemidiagBound() const {
    if (!semidiagonalCheck())
        throwValidation("NotSemidiagonal", "tensor fails the semi-diagonal shape check");
    SemidiagBound out;
    const int r = order();
    if (r < 2) throwValidation("BadParameters", "need order >= 2");
    out.floor = Rational(dims_[0], r - 1);
    RankReport rep = maxFlatteningRank();
    out.mfrank = rep.max;
    out.holds = Rational(out.mfrank) >= out.floor;
    return out;
}

} // namespace agh
