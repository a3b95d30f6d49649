#ifndef AGH_BITSET_HPP
#define AGH_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace agh {

// Dynamic bitset tuned for the set operations this project lives on:
// symmetric differences, intersections, popcounts over neighborhoods.
class DynBitset {
public:
    DynBitset() : size_(0) {}
    explicit DynBitset(std::size_t size) : size_(size), blocks_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { blocks_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto b : blocks_) c += std::popcount(b);
        return c;
    }

    bool any() const {
        for (auto b : blocks_) if (b) return true;
        return false;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
        return *this;
    }
    DynBitset& operator^=(const DynBitset& o) {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] ^= o.blocks_[i];
        return *this;
    }
    DynBitset operator&(const DynBitset& o) const { DynBitset r(*this); r &= o; return r; }
    DynBitset operator|(const DynBitset& o) const { DynBitset r(*this); r |= o; return r; }
    DynBitset operator^(const DynBitset& o) const { DynBitset r(*this); r ^= o; return r; }

    bool operator==(const DynBitset& o) const { return size_ == o.size_ && blocks_ == o.blocks_; }

    std::size_t symmetricDifferenceCount(const DynBitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            c += std::popcount(blocks_[i] ^ o.blocks_[i]);
        return c;
    }

    std::size_t intersectionCount(const DynBitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            c += std::popcount(blocks_[i] & o.blocks_[i]);
        return c;
    }

    bool intersects(const DynBitset& o) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & o.blocks_[i]) return true;
        return false;
    }

    std::vector<int> toIndices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i)) out.push_back(static_cast<int>(i));
        return out;
    }

    const std::vector<std::uint64_t>& blocks() const { return blocks_; }

private:
    std::size_t size_;
    std::vector<std::uint64_t> blocks_;
};

} // namespace agh

#endif
