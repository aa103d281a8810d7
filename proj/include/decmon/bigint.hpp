#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace decmon {

// Exact integer arithmetic for the combinatorial formulas (orbit sizes,
// Gaussian binomials, codeword counts).  No floating point anywhere in
// the counting paths.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned e) {
    return BigInt(1) << e;
}

}  // namespace decmon
