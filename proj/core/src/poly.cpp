#include "agh/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace agh {

MultiPoly::MultiPoly(FieldPrime field, int blocks, int varsPerBlock, int degreeCap,
                     std::vector<Monomial> monomials)
    : field_(field), blocks_(blocks), varsPerBlock_(varsPerBlock),
      degreeCap_(degreeCap), monomials_(std::move(monomials)) {
    if (blocks_ < 1 || varsPerBlock_ < 1)
        throwValidation("BadParameters", "polynomial needs at least one block and one variable");
    if (degreeCap_ < 0)
        throwValidation("BadParameters", "negative degree cap");
    sortAndCombine();
    validate();
}

MultiPoly MultiPoly::zero(FieldPrime field, int blocks, int varsPerBlock, int degreeCap) {
    return MultiPoly(field, blocks, varsPerBlock, degreeCap, {});
}

void MultiPoly::sortAndCombine() {
    for (auto& m : monomials_) {
        if (m.exps.size() != static_cast<std::size_t>(vars()))
            throwValidation("ArityMismatch", "monomial exponent vector has wrong length");
    }
    std::sort(monomials_.begin(), monomials_.end(),
              [](const Monomial& a, const Monomial& b) { return a.exps < b.exps; });
    std::vector<Monomial> out;
    for (auto& m : monomials_) {
        if (!out.empty() && out.back().exps == m.exps) {
            out.back().coeff = field_.add(out.back().coeff, field_.reduce(m.coeff));
        } else {
            Monomial c = m;
            c.coeff = field_.reduce(c.coeff);
            out.push_back(std::move(c));
        }
    }
    std::erase_if(out, [](const Monomial& m) { return m.coeff == 0; });
    monomials_ = std::move(out);
}

void MultiPoly::validate() const {
    for (const auto& m : monomials_) {
        if (m.coeff == 0 || m.coeff >= field_.p())
            throwValidation("BadParameters", "monomial coefficient outside [1, p-1]");
        for (int b = 0; b < blocks_; ++b) {
            long sum = 0;
            for (int v = 0; v < varsPerBlock_; ++v)
                sum += m.exps[static_cast<std::size_t>(b) * varsPerBlock_ + v];
            if (sum > degreeCap_)
                throwValidation("DegreeCapViolated",
                                "block " + std::to_string(b + 1) + " exceeds degree cap " +
                                    std::to_string(degreeCap_));
        }
    }
}

std::uint32_t MultiPoly::eval(std::span<const std::uint32_t> point) const {
    if (point.size() != static_cast<std::size_t>(vars()))
        throwValidation("ArityMismatch", "evaluation point has wrong arity");
    for (auto v : point)
        if (v >= field_.p()) throwValidation("NonResidueInput", "point entry out of range");
    std::uint64_t acc = 0;
    const std::uint64_t p = field_.p();
    for (const auto& m : monomials_) {
        std::uint64_t term = m.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (point[i] == 0) { term = 0; break; }
            term = term * field_.pow(point[i], m.exps[i]) % p;
        }
        acc = (acc + term) % p;
    }
    return static_cast<std::uint32_t>(acc);
}

MultiPoly MultiPoly::add(const MultiPoly& o) const {
    std::vector<Monomial> ms = monomials_;
    ms.insert(ms.end(), o.monomials_.begin(), o.monomials_.end());
    return MultiPoly(field_, blocks_, varsPerBlock_, std::max(degreeCap_, o.degreeCap_), std::move(ms));
}

MultiPoly MultiPoly::mul(const MultiPoly& o, int degreeCapOut) const {
    std::map<std::vector<std::uint16_t>, std::uint32_t> acc;
    for (const auto& a : monomials_) {
        for (const auto& b : o.monomials_) {
            std::vector<std::uint16_t> e(a.exps.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = static_cast<std::uint16_t>(a.exps[i] + b.exps[i]);
            auto& c = acc[e];
            c = field_.add(c, field_.mul(a.coeff, b.coeff));
        }
    }
    std::vector<Monomial> ms;
    for (auto& [e, c] : acc)
        if (c != 0) ms.push_back({c, e});
    return MultiPoly(field_, blocks_, varsPerBlock_, degreeCapOut, std::move(ms));
}

MultiPoly MultiPoly::permuteBlocks(std::span<const int> perm) const {
    std::vector<Monomial> ms;
    ms.reserve(monomials_.size());
    for (const auto& m : monomials_) {
        Monomial out;
        out.coeff = m.coeff;
        out.exps.resize(m.exps.size());
        for (int b = 0; b < blocks_; ++b)
            for (int v = 0; v < varsPerBlock_; ++v)
                out.exps[static_cast<std::size_t>(b) * varsPerBlock_ + v] =
                    m.exps[static_cast<std::size_t>(perm[b]) * varsPerBlock_ + v];
        ms.push_back(std::move(out));
    }
    return MultiPoly(field_, blocks_, varsPerBlock_, degreeCap_, std::move(ms));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t factor = n - k + i;
        std::uint64_t g = std::gcd(r, i);
        std::uint64_t ri = r / g, ii = i / g;
        // after dividing by i/g the product is exact; check the multiply
        std::uint64_t fg = std::gcd(factor, ii);
        factor /= fg; ii /= fg;
        if (ii != 1) throwInternal("Overflow", "binomial internal reduction failed");
        if (factor != 0 && ri > UINT64_MAX / factor)
            throwBudget("Overflow", "binomial coefficient exceeds 64 bits");
        r = ri * factor;
    }
    return r;
}

std::uint64_t monomialCount(int n, int d) {
    if (n < 0 || d < 0)
        throwValidation("BadParameters", "monomialCount needs n, d >= 0");
    return binomial(static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(d),
                    static_cast<std::uint64_t>(d));
}

} // namespace agh
