#pragma once

#include <cstdint>
#include <string>

#include "decmon/bigint.hpp"
#include "decmon/gf2.hpp"
#include "decmon/monomial_set.hpp"

namespace decmon {

// The monomial code C(I): the span of { ev(f) : f in I }.  Dimension is
// |I|.  The decreasing / weakly-decreasing flags are computed once at
// construction; the duality, distance and counting formulas below require
// the decreasing flag and refuse otherwise.
class MonomialCode {
public:
    explicit MonomialCode(MonomialSet I);

    // R(r, m) = C([1, x_{m-r}...x_{m-1}]): all monomials of degree <= r.
    static MonomialCode reed_muller(int r, int m);

    int var_count() const { return I_.var_count(); }
    uint64_t length() const { return uint64_t(1) << I_.var_count(); }
    size_t dimension() const { return I_.size(); }
    const MonomialSet& monomials() const { return I_; }
    bool decreasing() const { return decreasing_; }
    bool weakly_decreasing() const { return weakly_decreasing_; }

    friend bool operator==(const MonomialCode& a, const MonomialCode& b) {
        return a.I_ == b.I_;
    }

private:
    MonomialSet I_;
    bool decreasing_;
    bool weakly_decreasing_;
};

// C(I)^perp = C(M_m \ check(I)) for decreasing I; the result is again
// decreasing.  Refuses non-decreasing input (the nullspace oracle covers
// that case separately).
MonomialCode dual(const MonomialCode& code);

// r_plus: largest r with x_0...x_{r-1} in I (so d = 2^{m - r_plus});
// r_minus: largest r with x_{m-r}...x_{m-1} in I.  Both require a
// nonempty decreasing I.
int r_plus(const MonomialCode& code);
int r_minus(const MonomialCode& code);

uint64_t min_distance(const MonomialCode& code);

struct DualParameters {
    int r_minus_dual;       // m - 1 - r_plus(C)
    int r_plus_dual;        // m - 1 - r_minus(C)
    uint64_t dual_distance; // 2^{r_minus(C) + 1}
};

// Undefined (throws) for the full code, whose dual is the zero code.
DualParameters dual_parameters(const MonomialCode& code);

// C(I) is contained in its dual iff no f in I has its multiplicative
// complement in I.  Only meaningful at rate <= 1/2.
bool weakly_self_dual(const MonomialCode& code);

// |W_min| = 2^{r_plus} * sum over maximal-degree monomials g of 2^{|lambda_g|}.
BigInt min_weight_count(const MonomialCode& code);

// Canonical JSON form: {"m": int, "monomials": [sorted bit-set ints],
// "meta": {...}}.  meta is preserved on read, optional.
std::string code_to_json(const MonomialCode& code, const std::string& meta_json = "{}");
MonomialCode code_from_json(const std::string& text);
MonomialCode read_code_file(const std::string& path);
void write_code_file(const std::string& path, const MonomialCode& code,
                     const std::string& meta_json = "{}");

}  // namespace decmon
