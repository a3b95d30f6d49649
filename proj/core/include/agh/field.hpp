#ifndef AGH_FIELD_HPP
#define AGH_FIELD_HPP

#include <cstdint>

#include "agh/errors.hpp"

namespace agh {

/// Prime field F_p, p in [2, 2^31-1]. Residues are canonical representatives
/// in [0, p-1]; every operation validates its inputs rather than wrapping.
class FieldPrime {
public:
    explicit FieldPrime(std::uint64_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // reduce an arbitrary signed integer into [0, p-1]
    std::uint32_t reduce(std::int64_t v) const;

    bool operator==(const FieldPrime& o) const { return p_ == o.p_; }

    static bool isPrime(std::uint64_t n);

private:
    void check(std::uint32_t a) const {
        if (a >= p_) throwValidation("NonResidueInput", "residue out of range [0, p-1]");
    }
    std::uint32_t p_;
};

} // namespace agh

#endif
