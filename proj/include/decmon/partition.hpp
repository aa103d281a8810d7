#pragma once

#include <vector>

#include "decmon/bigint.hpp"
#include "decmon/monomial.hpp"

namespace decmon {

// An integer partition (Young diagram) inside a rows x width grid.
// Parts are stored weakly decreasing with zero parts dropped.
struct Partition {
    int rows = 0;    // grid height d
    int width = 0;   // grid width m - d
    std::vector<int> parts;

    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.rows == b.rows && a.width == b.width && a.parts == b.parts;
    }
};

// Young diagram of a degree-d monomial g = x_{i_1}...x_{i_d} (i_1 < ... < i_d):
// lambda_g = (i_d - (d-1), ..., i_1 - 0) inside the d x (m-d) grid.
// The constant monomial maps to the empty partition in a 0 x m grid.
Partition young_partition(const Monomial& g);

// Inverse bijection: i_k = lambda_k + (k-1) for a partition inside the
// d x (m-d) grid.
Monomial monomial_from_partition(int m, const Partition& lambda);

// Shortcut for the exponent in the orbit-size formula: |lambda_g|.
int young_size(const Monomial& g);

// Gaussian binomial coefficient
//   (2^m - 1)(2^m - 2)...(2^m - 2^{r-1}) / ((2^r - 1)...(2^r - 2^{r-1})),
// the number of r-dimensional subspaces of F_2^m.  Exact arithmetic.
BigInt gaussian_binomial(int m, int r);

}  // namespace decmon
