#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace decmon {

// Packed binary vector.  Unused high bits of the last word are kept zero.
class BitVector {
public:
    explicit BitVector(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i, bool v) {
        uint64_t bit = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= bit; else w_[i >> 6] &= ~bit;
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    BitVector& operator^=(const BitVector& o);

    size_t weight() const {
        size_t s = 0;
        for (uint64_t x : w_) s += std::popcount(x);
        return s;
    }
    bool any() const {
        for (uint64_t x : w_) if (x) return true;
        return false;
    }

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

    std::string str() const;                       // '0'/'1', position 0 first
    static BitVector parse(const std::string&);

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator<(const BitVector& a, const BitVector& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.w_ < b.w_;
    }

private:
    size_t n_;
    std::vector<uint64_t> w_;
};

}  // namespace decmon
