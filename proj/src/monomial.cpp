#include "decmon/monomial.hpp"

#include <cctype>
#include <stdexcept>

namespace decmon {

Monomial::Monomial(int m, uint32_t mask) : m_(m), mask_(mask) {
    if (m < 1 || m > kMaxVars)
        throw std::invalid_argument("variable count must be in [1, 30], got " + std::to_string(m));
    if (m < 32 && (mask >> m) != 0)
        throw std::invalid_argument("monomial uses a variable index >= m");
}

Monomial Monomial::from_indices(int m, const std::vector<int>& indices) {
    uint32_t mask = 0;
    for (int i : indices) {
        if (i < 0 || i >= m)
            throw std::invalid_argument("variable index out of range: x" + std::to_string(i));
        mask |= uint32_t(1) << i;
    }
    return Monomial(m, mask);
}

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    for (int i = 0; i < m_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string Monomial::str() const {
    if (mask_ == 0) return "1";
    std::string s;
    for (int i = 0; i < m_; ++i) {
        if (!contains(i)) continue;
        if (!s.empty()) s += '*';
        s += 'x';
        s += std::to_string(i);
    }
    return s;
}

Monomial Monomial::parse(int m, const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty monomial string");
    if (t == "1") return Monomial(m, 0);  // the constant monomial

    bool all_digits = true;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) { all_digits = false; break; }
    if (all_digits) {
        unsigned long v = std::stoul(t);
        if (m < 32 && (v >> m) != 0)
            throw std::invalid_argument("bit-set integer " + t + " does not fit in " +
                                        std::to_string(m) + " variables");
        return Monomial(m, static_cast<uint32_t>(v));
    }

    // "x3*x1*x0" in any order; duplicates collapse (x_i^2 = x_i).
    uint32_t mask = 0;
    size_t pos = 0;
    while (pos < t.size()) {
        if (t[pos] != 'x' && t[pos] != 'X')
            throw std::invalid_argument("bad monomial syntax: " + text);
        ++pos;
        size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("bad monomial syntax: " + text);
        int idx = std::stoi(t.substr(start, pos - start));
        if (idx < 0 || idx >= m)
            throw std::invalid_argument("variable index out of range: x" + std::to_string(idx));
        mask |= uint32_t(1) << idx;
        if (pos < t.size()) {
            if (t[pos] != '*') throw std::invalid_argument("bad monomial syntax: " + text);
            ++pos;
            if (pos == t.size()) throw std::invalid_argument("bad monomial syntax: " + text);
        }
    }
    return Monomial(m, mask);
}

static void check_same_m(const Monomial& f, const Monomial& g) {
    if (f.var_count() != g.var_count())
        throw std::invalid_argument("incompatible variable counts");
}

bool weak_leq(const Monomial& f, const Monomial& g) {
    check_same_m(f, g);
    return (f.mask() & g.mask()) == f.mask();
}

// Componentwise comparison of the s smallest indices of f against the s
// largest indices of g (s = deg f).  Walking both masks from the top
// makes the divisor formulation unnecessary: the best divisor of g is
// always its top-s indices.
bool leq(const Monomial& f, const Monomial& g) {
    check_same_m(f, g);
    int df = f.degree(), dg = g.degree();
    if (df > dg) return false;
    uint32_t fm = f.mask(), gm = g.mask();
    // Pair the k-th largest index of f with the k-th largest of g.
    while (fm != 0) {
        int fi = 31 - std::countl_zero(fm);
        int gi = 31 - std::countl_zero(gm);
        if (fi > gi) return false;
        fm &= ~(uint32_t(1) << fi);
        gm &= ~(uint32_t(1) << gi);
    }
    return true;
}

}  // namespace decmon
