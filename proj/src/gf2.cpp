#include "decmon/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "decmon/errors.hpp"

namespace decmon {

void BinaryMatrix::push_row(BitVector v) {
    if (v.size() != cols) throw std::invalid_argument("row length does not match matrix");
    rows.push_back(std::move(v));
}

std::string BinaryMatrix::str() const {
    std::string out;
    for (const auto& r : rows) {
        out += r.str();
        out += '\n';
    }
    return out;
}

BinaryMatrix BinaryMatrix::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    BinaryMatrix M;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        BitVector v = BitVector::parse(line);
        if (first) {
            M.cols = v.size();
            first = false;
        }
        M.push_row(std::move(v));
    }
    return M;
}

static void check_matrix_cap(int m, int cap) {
    if (m > cap)
        throw CapError("length-2^m operations are capped at m <= " + std::to_string(cap) +
                       ", got m = " + std::to_string(m));
}

BitVector evaluate(const Monomial& g, int matrix_cap) {
    check_matrix_cap(g.var_count(), matrix_cap);
    size_t n = size_t(1) << g.var_count();
    uint32_t mask = g.mask();
    BitVector v(n);
    // g(u) = 1 iff every variable of g is set in u.
    for (size_t u = 0; u < n; ++u)
        if ((u & mask) == mask) v.set(u, true);
    return v;
}

BinaryMatrix kronecker_gm(int m, int matrix_cap) {
    check_matrix_cap(m, matrix_cap);
    // Iterated Kronecker power of [[1,1],[0,1]], most significant factor
    // added last so that row i equals ev of the monomial with mask i.
    BinaryMatrix M(1);
    BitVector seed(1);
    seed.set(0, true);
    M.push_row(seed);
    for (int t = 0; t < m; ++t) {
        size_t n = M.cols;
        BinaryMatrix next(2 * n);
        for (int hi = 0; hi < 2; ++hi) {
            for (const auto& row : M.rows) {
                BitVector r(2 * n);
                for (size_t u = 0; u < n; ++u) {
                    if (!row.get(u)) continue;
                    if (hi == 0) r.set(u, true);  // top factor (1,1)
                    r.set(u + n, true);
                }
                next.push_row(std::move(r));
            }
        }
        M = std::move(next);
    }
    return M;
}

BinaryMatrix generator_matrix(const MonomialSet& I, int matrix_cap) {
    check_matrix_cap(I.var_count(), matrix_cap);
    BinaryMatrix M(size_t(1) << I.var_count());
    for (uint32_t mask : I.masks())
        M.push_row(evaluate(Monomial(I.var_count(), mask), matrix_cap));
    return M;
}

size_t rank_gf2(BinaryMatrix M) {
    size_t rank = 0;
    size_t nrows = M.rows.size();
    for (size_t col = 0; col < M.cols && rank < nrows; ++col) {
        size_t pivot = rank;
        while (pivot < nrows && !M.rows[pivot].get(col)) ++pivot;
        if (pivot == nrows) continue;
        std::swap(M.rows[rank], M.rows[pivot]);
        for (size_t r = rank + 1; r < nrows; ++r)
            if (M.rows[r].get(col)) M.rows[r] ^= M.rows[rank];
        ++rank;
    }
    return rank;
}

bool row_space_equal(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols != b.cols) return false;
    size_t ra = rank_gf2(a);
    size_t rb = rank_gf2(b);
    if (ra != rb) return false;
    BinaryMatrix stacked(a.cols);
    stacked.rows = a.rows;
    for (const auto& r : b.rows) stacked.rows.push_back(r);
    return rank_gf2(std::move(stacked)) == ra;
}

bool in_row_space(const BinaryMatrix& M, const BitVector& v) {
    size_t r = rank_gf2(M);
    BinaryMatrix augmented = M;
    augmented.push_row(v);
    return rank_gf2(std::move(augmented)) == r;
}

BinaryMatrix nullspace_basis(const BinaryMatrix& M) {
    // Row-reduce a copy, remember pivot columns, then read one basis
    // vector off each free column.
    BinaryMatrix R = M;
    size_t nrows = R.rows.size();
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < R.cols && rank < nrows; ++col) {
        size_t pivot = rank;
        while (pivot < nrows && !R.rows[pivot].get(col)) ++pivot;
        if (pivot == nrows) continue;
        std::swap(R.rows[rank], R.rows[pivot]);
        for (size_t r = 0; r < nrows; ++r)
            if (r != rank && R.rows[r].get(col)) R.rows[r] ^= R.rows[rank];
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(R.cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    BinaryMatrix basis(R.cols);
    for (size_t free = 0; free < R.cols; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(R.cols);
        v.set(free, true);
        for (size_t r = 0; r < rank; ++r)
            if (R.rows[r].get(free)) v.set(pivot_col[r], true);
        basis.push_row(std::move(v));
    }
    return basis;
}

namespace {

struct SweepState {
    std::vector<BitVector> rows;
    size_t n;
};

static SweepState sweep_setup(const MonomialSet& I, int dim_cap, int matrix_cap) {
    if (I.empty())
        throw std::domain_error("no nonzero codeword: the zero code has no minimum weight");
    if (static_cast<int>(I.size()) > dim_cap)
        throw CapError("brute-force enumeration is capped at dimension " +
                       std::to_string(dim_cap) + ", got " + std::to_string(I.size()));
    SweepState s;
    s.n = size_t(1) << I.var_count();
    for (uint32_t mask : I.masks())
        s.rows.push_back(evaluate(Monomial(I.var_count(), mask), matrix_cap));
    return s;
}

// Visits every nonzero codeword once, Gray-code order: step c toggles
// generator row ctz(c), so each codeword is one row XOR away from the
// previous one.
template <typename Fn>
static void sweep_codewords(const SweepState& s, Fn&& fn) {
    uint64_t total = uint64_t(1) << s.rows.size();
    BitVector current(s.n);
    for (uint64_t c = 1; c < total; ++c) {
        current ^= s.rows[std::countr_zero(c)];
        fn(current);
    }
}

}  // namespace

MinWeightResult min_weight_bruteforce(const MonomialSet& I, int dim_cap, int matrix_cap) {
    SweepState s = sweep_setup(I, dim_cap, matrix_cap);
    size_t best = s.n + 1;
    uint64_t count = 0;
    sweep_codewords(s, [&](const BitVector& w) {
        size_t wt = w.weight();
        if (wt < best) {
            best = wt;
            count = 1;
        } else if (wt == best) {
            ++count;
        }
    });
    return MinWeightResult{best, BigInt(count)};
}

std::vector<BitVector> min_weight_words_bruteforce(const MonomialSet& I, int dim_cap,
                                                   int matrix_cap) {
    SweepState s = sweep_setup(I, dim_cap, matrix_cap);
    size_t best = s.n + 1;
    std::vector<BitVector> words;
    sweep_codewords(s, [&](const BitVector& w) {
        size_t wt = w.weight();
        if (wt < best) {
            best = wt;
            words.clear();
        }
        if (wt == best) words.push_back(w);
    });
    std::sort(words.begin(), words.end());
    return words;
}

}  // namespace decmon
