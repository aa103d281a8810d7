#pragma once

#include <cstdint>
#include <vector>

#include "decmon/monomial.hpp"

namespace decmon {

// Exhaustive structures (full M_m enumeration, closures, intervals) are
// refused above this variable count instead of silently crawling.
inline constexpr int kMaxExhaustiveVars = 16;

// A finite set of monomials, all over the same m variables.  Canonical
// form: masks sorted ascending, no duplicates.
class MonomialSet {
public:
    explicit MonomialSet(int m) : m_(check_m(m)) {}
    MonomialSet(int m, std::vector<uint32_t> masks);

    int var_count() const { return m_; }
    size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }
    bool contains(uint32_t mask) const;
    const std::vector<uint32_t>& masks() const { return masks_; }
    Monomial at(size_t i) const { return Monomial(m_, masks_[i]); }

    friend bool operator==(const MonomialSet& a, const MonomialSet& b) {
        return a.m_ == b.m_ && a.masks_ == b.masks_;
    }

private:
    static int check_m(int m);
    int m_;
    std::vector<uint32_t> masks_;
};

// All 2^m monomials of M_m (m capped at kMaxExhaustiveVars).
MonomialSet all_monomials(int m);

// Immediate predecessors in the order: (a) one variable removed,
// (b) one x_i shifted down to a free x_{i-1}.  These generate the
// transitive reduction, so closure under them is equivalent to being a
// decreasing set; checked against the definitional filter in tests.
bool is_decreasing(const MonomialSet& I);

// Same check for divisibility only (moves of type (a)).
bool is_weakly_decreasing(const MonomialSet& I);

// Smallest decreasing superset of S (idempotent, monotone, extensive).
MonomialSet decreasing_closure(const MonomialSet& S);

// The interval [f, h] = { g : f <= g <= h }.  Requires leq(f, h).
MonomialSet interval(const Monomial& f, const Monomial& h);

}  // namespace decmon
