#ifndef AGH_RNG_HPP
#define AGH_RNG_HPP

#include <cstdint>

namespace agh {

// splitmix64. All randomness in the project flows through this generator,
// never through std:: distributions (their output is implementation-defined
// and would break byte-identical reports across toolchains).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) by rejection; bound >= 1
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }

    int range(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // uniform double in [0,1) with 53 bits
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double prob) { return unit() < prob; }

    // child seed derivation: fixed hashing discipline, no global state
    static std::uint64_t child(std::uint64_t seed, std::uint64_t stream) {
        Rng r(seed ^ (0x5851f42d4c957f2dULL * (stream + 1)));
        return r.next();
    }

private:
    std::uint64_t state_;
};

} // namespace agh

#endif
