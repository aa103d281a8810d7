#include "decmon/monomial_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "decmon/errors.hpp"

namespace decmon {

int MonomialSet::check_m(int m) {
    if (m < 1 || m > kMaxVars)
        throw std::invalid_argument("variable count must be in [1, 30], got " + std::to_string(m));
    return m;
}

MonomialSet::MonomialSet(int m, std::vector<uint32_t> masks)
    : m_(check_m(m)), masks_(std::move(masks)) {
    for (uint32_t mk : masks_)
        if (m_ < 32 && (mk >> m_) != 0)
            throw std::invalid_argument("monomial uses a variable index >= m");
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

bool MonomialSet::contains(uint32_t mask) const {
    return std::binary_search(masks_.begin(), masks_.end(), mask);
}

static void check_exhaustive(int m, const char* what) {
    if (m > kMaxExhaustiveVars)
        throw CapError(std::string(what) + " is capped at m <= " +
                       std::to_string(kMaxExhaustiveVars) + ", got m = " + std::to_string(m));
}

MonomialSet all_monomials(int m) {
    check_exhaustive(m, "full monomial enumeration");
    std::vector<uint32_t> masks(size_t(1) << m);
    for (size_t i = 0; i < masks.size(); ++i) masks[i] = uint32_t(i);
    return MonomialSet(m, std::move(masks));
}

// Immediate predecessors of f: drop one variable, or slide one variable
// down into an adjacent free slot.  Together they generate the transitive
// reduction of the order (property-tested against the definitional check).
template <typename Fn>
static void for_each_predecessor(int m, uint32_t f, bool weak_only, Fn&& fn) {
    for (int i = 0; i < m; ++i) {
        uint32_t bit = uint32_t(1) << i;
        if (!(f & bit)) continue;
        fn(f & ~bit);
        if (!weak_only && i > 0 && !(f & (bit >> 1)))
            fn((f & ~bit) | (bit >> 1));
    }
}

static bool closed_under_predecessors(const MonomialSet& I, bool weak_only) {
    int m = I.var_count();
    for (uint32_t f : I.masks()) {
        bool ok = true;
        for_each_predecessor(m, f, weak_only, [&](uint32_t p) {
            if (!I.contains(p)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_decreasing(const MonomialSet& I) { return closed_under_predecessors(I, false); }
bool is_weakly_decreasing(const MonomialSet& I) { return closed_under_predecessors(I, true); }

MonomialSet decreasing_closure(const MonomialSet& S) {
    check_exhaustive(S.var_count(), "decreasing closure");
    int m = S.var_count();
    std::vector<bool> seen(size_t(1) << m, false);
    std::vector<uint32_t> queue(S.masks());
    for (uint32_t f : queue) seen[f] = true;
    while (!queue.empty()) {
        uint32_t f = queue.back();
        queue.pop_back();
        for_each_predecessor(m, f, false, [&](uint32_t p) {
            if (!seen[p]) {
                seen[p] = true;
                queue.push_back(p);
            }
        });
    }
    std::vector<uint32_t> out;
    for (size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(uint32_t(i));
    return MonomialSet(m, std::move(out));
}

MonomialSet interval(const Monomial& f, const Monomial& h) {
    if (f.var_count() != h.var_count())
        throw std::invalid_argument("incompatible variable counts");
    if (!leq(f, h))
        throw std::domain_error("interval requires f <= h");
    check_exhaustive(f.var_count(), "interval enumeration");
    int m = f.var_count();
    std::vector<uint32_t> out;
    for (uint32_t g = 0; g < (uint32_t(1) << m); ++g) {
        Monomial gm(m, g);
        if (leq(f, gm) && leq(gm, h)) out.push_back(g);
    }
    return MonomialSet(m, std::move(out));
}

}  // namespace decmon
