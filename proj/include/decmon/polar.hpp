#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "decmon/channel.hpp"
#include "decmon/code.hpp"
#include "decmon/monomial.hpp"

namespace decmon {

// The +/- recipe of a bit channel: position i holds '-' iff x_i divides g.
// Transforms are applied from position m-1 down to position 0, matching
// W^{+-} = (W^+)^-.
struct SignSequence {
    int m = 0;
    std::vector<bool> minus;  // minus[i] <=> x_i in ind(g)

    std::string str() const;  // rendered high index first, e.g. "+-+--"
};

SignSequence sign_sequence(const Monomial& g);

// W^g: the Arikan bit channel of W indexed by the monomial g.
SymmetricChannel synthesize_bit_channel(const SymmetricChannel& W, const Monomial& g,
                                        const ChannelCaps& caps = {});

struct RankedMonomial {
    uint32_t mask;
    double b;
};

// All 2^m bit channels, sorted by Bhattacharyya value ascending.  Values
// within the numerical resolution of the transform pipeline count as
// ties and are ordered by (degree, sorted index tuple lex), which is
// compatible with the monomial order.  Shares the transform tree across
// channels.
std::vector<RankedMonomial> rank_monomials(const SymmetricChannel& W, int m,
                                           const ChannelCaps& caps = {});

// The k monomials with the smallest B(W^g).
MonomialCode construct_polar(const SymmetricChannel& W, int m, uint64_t k,
                             const ChannelCaps& caps = {});
MonomialCode construct_polar(const std::vector<RankedMonomial>& ranking, int m,
                             uint64_t k);

struct MonteCarloResult {
    double estimate = 0.0;
    double std_error = 0.0;
    uint64_t samples = 0;
};

// Simulates the bit-channel model directly: draw a uniform message over
// the 2^m monomial-indexed bits, overwrite coordinate g with 0, encode
// with G_m, transmit through W, and score sqrt of the likelihood ratio of
// the observation (channel outputs plus the revealed bits above g in the
// integer order on monomials).  Deterministic for a given seed and
// independent of internal partitioning.
MonteCarloResult monte_carlo_bhattacharyya(const SymmetricChannel& W, const Monomial& g,
                                           uint64_t samples, uint64_t seed);

}  // namespace decmon
