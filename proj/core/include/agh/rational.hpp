#ifndef AGH_RATIONAL_HPP
#define AGH_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "agh/errors.hpp"

namespace agh {

// Exact rational on int64 with __int128 intermediates. Densities, thresholds
// and report fields use this type so acceptance checks never touch floats.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return fromI128((__int128)num_ * o.den_ + (__int128)o.num_ * den_,
                        (__int128)den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return fromI128((__int128)num_ * o.den_ - (__int128)o.num_ * den_,
                        (__int128)den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return fromI128((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throwInternal("DivisionByZero", "rational division by zero");
        return fromI128((__int128)num_ * o.den_, (__int128)den_ * o.num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    double toDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

private:
    static Rational fromI128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throwInternal("RationalOverflow", "rational exceeds 64-bit range after reduction");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throwInternal("DivisionByZero", "zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace agh

#endif
