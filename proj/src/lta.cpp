#include "decmon/lta.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "decmon/errors.hpp"
#include "decmon/partition.hpp"

namespace decmon {

LtaMap::LtaMap(int m) : m_(m), rows_(m, 0), b_(0) {
    if (m < 1 || m > kMaxVars)
        throw std::invalid_argument("variable count must be in [1, 30], got " + std::to_string(m));
}

void LtaMap::set_a(int i, int j, bool v) {
    if (i < 0 || i >= m_ || j < 0 || j >= i)
        throw std::invalid_argument("LTA entries live strictly below the diagonal");
    uint32_t bit = uint32_t(1) << j;
    if (v) rows_[i] |= bit; else rows_[i] &= ~bit;
}

void LtaMap::set_row(int i, uint32_t bits) {
    if (i < 0 || i >= m_) throw std::invalid_argument("row index out of range");
    if (bits >> i) throw std::invalid_argument("LTA entries live strictly below the diagonal");
    rows_[i] = bits;
}

void LtaMap::set_b(int i, bool v) {
    if (i < 0 || i >= m_) throw std::invalid_argument("index out of range");
    uint32_t bit = uint32_t(1) << i;
    if (v) b_ |= bit; else b_ &= ~bit;
}

BoolPoly::BoolPoly(int m, std::vector<uint32_t> terms) : m_(m), terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    // mod-2 cancellation: keep terms appearing an odd number of times
    std::vector<uint32_t> reduced;
    for (size_t i = 0; i < terms_.size();) {
        size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
        if ((j - i) & 1) reduced.push_back(terms_[i]);
        i = j;
    }
    terms_ = std::move(reduced);
}

bool BoolPoly::has_term(uint32_t mask) const {
    return std::binary_search(terms_.begin(), terms_.end(), mask);
}

int BoolPoly::degree() const {
    int d = 0;
    for (uint32_t t : terms_) d = std::max(d, std::popcount(t));
    return d;
}

std::string BoolPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (uint32_t t : terms_) {
        if (!s.empty()) s += " + ";
        s += Monomial(m_, t).str();
    }
    return s;
}

BoolPoly lta_action(const LtaMap& map, const Monomial& g) {
    if (map.var_count() != g.var_count())
        throw std::invalid_argument("incompatible variable counts");
    // Multiply out prod_{i in ind(g)} (x_i + sum_j a_ij x_j + b_i), reducing
    // with x^2 = x term by term (t*s has mask t|s).
    std::vector<uint32_t> acc = {0};  // the polynomial 1
    for (int i : g.indices()) {
        std::vector<uint32_t> factor;
        factor.push_back(uint32_t(1) << i);
        uint32_t row = map.row(i);
        while (row) {
            int j = std::countr_zero(row);
            factor.push_back(uint32_t(1) << j);
            row &= row - 1;
        }
        if (map.b(i)) factor.push_back(0);
        std::vector<uint32_t> next;
        next.reserve(acc.size() * factor.size());
        for (uint32_t t : acc)
            for (uint32_t s : factor) next.push_back(t | s);
        // cancel pairs mod 2 as we go to keep the intermediate size down
        std::sort(next.begin(), next.end());
        acc.clear();
        for (size_t a = 0; a < next.size();) {
            size_t b = a;
            while (b < next.size() && next[b] == next[a]) ++b;
            if ((b - a) & 1) acc.push_back(next[a]);
            a = b;
        }
    }
    return BoolPoly(g.var_count(), std::move(acc));
}

BitVector evaluate(const BoolPoly& p, int matrix_cap) {
    BitVector v(size_t(1) << p.var_count());
    for (uint32_t t : p.terms()) v ^= evaluate(Monomial(p.var_count(), t), matrix_cap);
    return v;
}

std::vector<uint32_t> coordinate_permutation(const LtaMap& map, int matrix_cap) {
    int m = map.var_count();
    if (m > matrix_cap)
        throw CapError("coordinate permutations are capped at m <= " + std::to_string(matrix_cap));
    size_t n = size_t(1) << m;
    std::vector<uint32_t> perm(n);
    for (size_t u = 0; u < n; ++u) {
        uint32_t out = 0;
        for (int i = 0; i < m; ++i) {
            uint32_t rowmask = map.row(i) | (uint32_t(1) << i);
            uint32_t bit = (std::popcount(uint32_t(u) & rowmask) & 1) ^ (map.b(i) ? 1 : 0);
            out |= bit << i;
        }
        perm[u] = out;
    }
    return perm;
}

BitVector permute(const BitVector& v, const std::vector<uint32_t>& perm) {
    if (v.size() != perm.size()) throw std::invalid_argument("permutation length mismatch");
    BitVector out(v.size());
    for (size_t u = 0; u < perm.size(); ++u)
        if (v.get(perm[u])) out.set(u, true);
    return out;
}

BinaryMatrix permute_columns(const BinaryMatrix& M, const std::vector<uint32_t>& perm) {
    BinaryMatrix out(M.cols);
    for (const auto& r : M.rows) out.push_row(permute(r, perm));
    return out;
}

BigInt orbit_size(const Monomial& g) {
    return pow2(g.degree() + young_size(g));
}

std::vector<BoolPoly> orbit_enumerate(const Monomial& g, int budget_cap) {
    int m = g.var_count();
    int budget = g.degree() + young_size(g);
    if (budget > budget_cap)
        throw CapError("orbit of size 2^" + std::to_string(budget) +
                       " exceeds the enumeration cap 2^" + std::to_string(budget_cap));
    // Free parameters of LTA(m,2)_g: b_i for i in ind(g), and a_ij for
    // i in ind(g), j < i, j not in ind(g).
    struct FreeBit {
        bool is_b;
        int i, j;
    };
    std::vector<FreeBit> free_bits;
    for (int i : g.indices()) {
        free_bits.push_back({true, i, 0});
        for (int j = 0; j < i; ++j)
            if (!g.contains(j)) free_bits.push_back({false, i, j});
    }
    std::vector<BoolPoly> orbit;
    orbit.reserve(size_t(1) << budget);
    for (uint64_t bits = 0; bits < (uint64_t(1) << budget); ++bits) {
        LtaMap map(m);
        for (int k = 0; k < budget; ++k) {
            if (!((bits >> k) & 1)) continue;
            const FreeBit& fb = free_bits[k];
            if (fb.is_b) map.set_b(fb.i, true);
            else map.set_a(fb.i, fb.j, true);
        }
        orbit.push_back(lta_action(map, g));
    }
    return orbit;
}

std::vector<BitVector> min_weight_enumerate(const MonomialCode& code, uint64_t enumerate_cap,
                                            int matrix_cap) {
    BigInt total = min_weight_count(code);
    if (total > BigInt(enumerate_cap))
        throw CapError("minimum-weight set of size " + total.str() +
                       " exceeds the enumeration cap");
    if (code.var_count() > matrix_cap)
        throw CapError("minimum-weight enumeration is capped at m <= " +
                       std::to_string(matrix_cap));
    int rp = r_plus(code);
    std::vector<BitVector> words;
    for (uint32_t f : code.monomials().masks()) {
        Monomial mono(code.var_count(), f);
        if (mono.degree() != rp) continue;
        for (const BoolPoly& p : orbit_enumerate(mono))
            words.push_back(evaluate(p, matrix_cap));
    }
    std::sort(words.begin(), words.end());
    return words;
}

LtaMap random_lta(int m, uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
    LtaMap map(m);
    for (int i = 1; i < m; ++i)
        map.set_row(i, uint32_t(rng() & ((uint32_t(1) << i) - 1u)));
    map.set_b_mask(uint32_t(rng() & ((uint32_t(1) << m) - 1u)));
    return map;
}

}  // namespace decmon
