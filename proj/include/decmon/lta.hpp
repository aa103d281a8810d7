#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "decmon/bigint.hpp"
#include "decmon/bitvec.hpp"
#include "decmon/code.hpp"
#include "decmon/monomial.hpp"

namespace decmon {

inline constexpr int kOrbitBudgetCap = 24;          // free bits of LTA(m,2)_g
inline constexpr uint64_t kEnumerateCap = uint64_t(1) << 20;

// An element of the lower triangular affine group LTA(m,2): x -> Ax + b
// with A unit lower triangular.  Row i stores only the strictly-lower
// entries as a bitmask over columns j < i.
class LtaMap {
public:
    explicit LtaMap(int m);  // identity map

    int var_count() const { return m_; }
    bool a(int i, int j) const { return (rows_[i] >> j) & 1u; }
    void set_a(int i, int j, bool v);
    uint32_t row(int i) const { return rows_[i]; }   // strictly-lower bits
    void set_row(int i, uint32_t bits);
    bool b(int i) const { return (b_ >> i) & 1u; }
    void set_b(int i, bool v);
    uint32_t b_mask() const { return b_; }
    void set_b_mask(uint32_t b) { b_ = b; }

    friend bool operator==(const LtaMap& x, const LtaMap& y) {
        return x.m_ == y.m_ && x.rows_ == y.rows_ && x.b_ == y.b_;
    }

private:
    int m_;
    std::vector<uint32_t> rows_;
    uint32_t b_;
};

// A polynomial in the quotient ring (x_i^2 = x_i), i.e. a GF(2) sum of
// square-free monomials.  Canonical form: term masks sorted ascending.
class BoolPoly {
public:
    explicit BoolPoly(int m) : m_(m) {}
    BoolPoly(int m, std::vector<uint32_t> terms);  // reduces mod 2, sorts

    int var_count() const { return m_; }
    size_t term_count() const { return terms_.size(); }
    const std::vector<uint32_t>& terms() const { return terms_; }
    bool has_term(uint32_t mask) const;
    int degree() const;
    std::string str() const;

    friend bool operator==(const BoolPoly& a, const BoolPoly& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }
    friend bool operator<(const BoolPoly& a, const BoolPoly& b) {
        return a.terms_ < b.terms_;
    }

private:
    int m_;
    std::vector<uint32_t> terms_;
};

// Substitutes y_i = x_i + sum_{j<i} a_ij x_j + b_i for each variable of g
// and expands the product with the x_i^2 = x_i reduction.  The expansion
// always contains g itself, and every term stays inside any decreasing
// set containing g.
BoolPoly lta_action(const LtaMap& map, const Monomial& g);

// ev(P) = XOR of the evaluations of its terms (ev is linear).
BitVector evaluate(const BoolPoly& p, int matrix_cap = kMatrixCapVars);

// The permutation u -> A u + b of the 2^m code positions.  Applying it to
// the coordinates of a decreasing monomial code maps codewords to
// codewords.
std::vector<uint32_t> coordinate_permutation(const LtaMap& map,
                                             int matrix_cap = kMatrixCapVars);

BitVector permute(const BitVector& v, const std::vector<uint32_t>& perm);
BinaryMatrix permute_columns(const BinaryMatrix& M, const std::vector<uint32_t>& perm);

// |LTA(m,2) . g| = 2^{deg g + |lambda_g|}.
BigInt orbit_size(const Monomial& g);

// The orbit of g, enumerated over the free parameters of the reduced
// stabilizer-complement subgroup LTA(m,2)_g only (rows i in ind(g),
// columns j not in ind(g), plus b_i for i in ind(g)); every assignment
// yields a distinct polynomial, so the result size is exactly orbit_size.
std::vector<BoolPoly> orbit_enumerate(const Monomial& g,
                                      int budget_cap = kOrbitBudgetCap);

// W_min as the union of the evaluated orbits of the maximal-degree
// monomials of I.  All results are distinct, of weight 2^{m - r_plus}.
std::vector<BitVector> min_weight_enumerate(const MonomialCode& code,
                                            uint64_t enumerate_cap = kEnumerateCap,
                                            int matrix_cap = kMatrixCapVars);

// Uniform over LTA(m,2); deterministic for a given seed.
LtaMap random_lta(int m, uint64_t seed);

}  // namespace decmon
