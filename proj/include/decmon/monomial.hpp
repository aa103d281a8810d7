#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace decmon {

// Highest supported variable count.  Monomials are square-free (x_i^2 is
// identified with x_i), so a monomial over x_0..x_{m-1} is just a set of
// variable indices, packed into one machine word.
inline constexpr int kMaxVars = 30;

// A square-free monomial over m variables.  mask bit j set <=> x_j divides
// the monomial; mask 0 is the constant monomial 1.
class Monomial {
public:
    Monomial(int m, uint32_t mask);

    static Monomial one(int m) { return Monomial(m, 0); }
    static Monomial from_indices(int m, const std::vector<int>& indices);

    // Accepts "1", "x3*x1*x0" (any order, whitespace tolerated), or a
    // decimal bit-set integer.
    static Monomial parse(int m, const std::string& text);

    int var_count() const { return m_; }
    uint32_t mask() const { return mask_; }
    int degree() const { return std::popcount(mask_); }
    bool contains(int i) const { return (mask_ >> i) & 1u; }

    // Variable indices in increasing order; empty for the constant 1.
    std::vector<int> indices() const;

    // Product of the variables absent from this monomial (involutive).
    Monomial complement() const { return Monomial(m_, ~mask_ & ((1u << m_) - 1u)); }

    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.m_ == b.m_ && a.mask_ == b.mask_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    int m_;
    uint32_t mask_;
};

// Divisibility order: f <=_w g iff f divides g, i.e. ind(f) is a subset of
// ind(g).  Throws on mismatched variable counts.
bool weak_leq(const Monomial& f, const Monomial& g);

// The finer partial order.  Equal degrees compare sorted index tuples
// componentwise; for deg f < deg g the largest deg(f) indices of g must
// dominate f componentwise (equivalent to the divisor formulation).
bool leq(const Monomial& f, const Monomial& g);

}  // namespace decmon
