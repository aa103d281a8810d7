#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "decmon/bigint.hpp"
#include "decmon/bitvec.hpp"
#include "decmon/monomial.hpp"
#include "decmon/monomial_set.hpp"

namespace decmon {

// Length-2^m structures (evaluations, generator matrices) are refused
// above this m; the brute-force codeword sweep above this dimension.
inline constexpr int kMatrixCapVars = 16;
inline constexpr int kBruteForceDimCap = 24;

struct BinaryMatrix {
    size_t cols = 0;
    std::vector<BitVector> rows;

    BinaryMatrix() = default;
    explicit BinaryMatrix(size_t cols) : cols(cols) {}

    size_t row_count() const { return rows.size(); }
    void push_row(BitVector v);

    std::string str() const;                      // one '0'/'1' row per line
    static BinaryMatrix parse(const std::string&);

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.cols == b.cols && a.rows == b.rows;
    }
};

// ev(g): bit at position u (u read as the integer sum u_i 2^i) is the
// product of u_i over i in ind(g).  Weight is exactly 2^{m-deg g}.
BitVector evaluate(const Monomial& g, int matrix_cap = kMatrixCapVars);

// The m-fold Kronecker power of [[1,1],[0,1]]; row i equals
// evaluate(Monomial(m, i)).
BinaryMatrix kronecker_gm(int m, int matrix_cap = kMatrixCapVars);

// One row per monomial, sorted ascending by bit-set integer.
BinaryMatrix generator_matrix(const MonomialSet& I, int matrix_cap = kMatrixCapVars);

size_t rank_gf2(BinaryMatrix M);  // takes a copy, eliminates in place
bool row_space_equal(const BinaryMatrix& a, const BinaryMatrix& b);
bool in_row_space(const BinaryMatrix& M, const BitVector& v);

// Basis of { v : M v^T = 0 }, one row per free column (cols - rank rows).
BinaryMatrix nullspace_basis(const BinaryMatrix& M);

struct MinWeightResult {
    size_t distance = 0;
    BigInt count = 0;
};

// Exact minimum nonzero weight and the number of codewords attaining it,
// by sweeping all 2^|I| codewords in Gray-code order (one row XOR per
// step).  Refuses dimensions above dim_cap and the zero code.
MinWeightResult min_weight_bruteforce(const MonomialSet& I,
                                      int dim_cap = kBruteForceDimCap,
                                      int matrix_cap = kMatrixCapVars);

// All minimum-weight codewords, same sweep.  Used as the oracle against
// the orbit-based enumeration.
std::vector<BitVector> min_weight_words_bruteforce(const MonomialSet& I,
                                                   int dim_cap = kBruteForceDimCap,
                                                   int matrix_cap = kMatrixCapVars);

}  // namespace decmon
