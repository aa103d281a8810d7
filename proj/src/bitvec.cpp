#include "decmon/bitvec.hpp"

#include <stdexcept>

namespace decmon {

BitVector& BitVector::operator^=(const BitVector& o) {
    if (o.n_ != n_) throw std::invalid_argument("bit vector length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

std::string BitVector::str() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVector BitVector::parse(const std::string& text) {
    BitVector v(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') v.set(i, true);
        else if (text[i] != '0') throw std::invalid_argument("bit vector text must be 0/1");
    }
    return v;
}

}  // namespace decmon
