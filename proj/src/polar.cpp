#include "decmon/polar.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "decmon/errors.hpp"

namespace decmon {

std::string SignSequence::str() const {
    std::string s;
    for (int i = m - 1; i >= 0; --i) s += minus[i] ? '-' : '+';
    return s;
}

SignSequence sign_sequence(const Monomial& g) {
    SignSequence s;
    s.m = g.var_count();
    s.minus.resize(s.m);
    for (int i = 0; i < s.m; ++i) s.minus[i] = g.contains(i);
    return s;
}

SymmetricChannel synthesize_bit_channel(const SymmetricChannel& W, const Monomial& g,
                                        const ChannelCaps& caps) {
    // W^{u_{m-1} ... u_0}: the sign of x_{m-1} is applied first.
    SymmetricChannel chan = W;
    for (int i = g.var_count() - 1; i >= 0; --i)
        chan = g.contains(i) ? transform_minus(chan, caps) : transform_plus(chan, caps);
    return chan;
}

namespace {

// Tie-break order compatible with the monomial order: degree first, then
// the sorted index tuples lexicographically.
bool tuple_lex_less(uint32_t f, uint32_t g) {
    int df = std::popcount(f), dg = std::popcount(g);
    if (df != dg) return df < dg;
    while (f != 0) {
        int fi = std::countr_zero(f);
        int gi = std::countr_zero(g);
        if (fi != gi) return fi < gi;
        f &= f - 1;
        g &= g - 1;
    }
    return false;
}

void rank_rec(const SymmetricChannel& W, int level, uint32_t mask,
              std::vector<RankedMonomial>& out, const ChannelCaps& caps) {
    if (level == 0) {
        out.push_back(RankedMonomial{mask, W.bhattacharyya()});
        return;
    }
    // share the common transform prefix across the 2^level descendants
    rank_rec(transform_plus(W, caps), level - 1, mask, out, caps);
    rank_rec(transform_minus(W, caps), level - 1, mask | (uint32_t(1) << (level - 1)), out, caps);
}

}  // namespace

// B values closer than this are ranked by the order-compatible tie break
// instead of their floating-point difference.  Ten polarization steps can
// smear B by ~1e-13 near the endpoints, enough to invert the true order
// of two nearly-equal channels and break the decreasing-prefix property;
// meaningful reliability gaps sit far above this resolution.
static constexpr double kRankResolution = 1e-10;

std::vector<RankedMonomial> rank_monomials(const SymmetricChannel& W, int m,
                                           const ChannelCaps& caps) {
    if (m < 1 || m > kMaxVars)
        throw std::invalid_argument("variable count must be in [1, 30], got " + std::to_string(m));
    std::vector<RankedMonomial> out;
    out.reserve(size_t(1) << m);
    rank_rec(W, m, 0, out, caps);
    std::sort(out.begin(), out.end(), [](const RankedMonomial& x, const RankedMonomial& y) {
        if (x.b != y.b) return x.b < y.b;
        return tuple_lex_less(x.mask, y.mask);
    });
    // re-order inside clusters of numerically indistinguishable B values
    size_t start = 0;
    for (size_t i = 1; i <= out.size(); ++i) {
        if (i < out.size() && out[i].b - out[i - 1].b <= kRankResolution) continue;
        std::sort(out.begin() + start, out.begin() + i,
                  [](const RankedMonomial& x, const RankedMonomial& y) {
                      return tuple_lex_less(x.mask, y.mask);
                  });
        start = i;
    }
    return out;
}

MonomialCode construct_polar(const std::vector<RankedMonomial>& ranking, int m, uint64_t k) {
    if (k > ranking.size())
        throw std::invalid_argument("dimension k out of range: " + std::to_string(k) +
                                    " > 2^m = " + std::to_string(ranking.size()));
    std::vector<uint32_t> masks;
    masks.reserve(k);
    for (uint64_t i = 0; i < k; ++i) masks.push_back(ranking[i].mask);
    return MonomialCode(MonomialSet(m, std::move(masks)));
}

MonomialCode construct_polar(const SymmetricChannel& W, int m, uint64_t k,
                             const ChannelCaps& caps) {
    return construct_polar(rank_monomials(W, m, caps), m, k);
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

// One simulated use of the bit-channel model: draw the monomial-indexed
// message, encode with G_m, transmit, then fold the observation back down
// level by level.  Returns sqrt of the likelihood ratio of the
// observation (input bit fixed to 0).
struct ModelScratch {
    std::vector<uint8_t> a;        // message bits, indexed by monomial mask
    std::vector<uint8_t> b;        // codeword / per-level encodings
    std::vector<double> alpha, beta, na, nb;
};

double simulate_one(const SymmetricChannel& W, uint32_t fmask, int m, std::mt19937_64& rng,
                    ModelScratch& s) {
    size_t n = size_t(1) << m;
    s.a.assign(n, 0);
    for (size_t u = 0; u < n; ++u) s.a[u] = uint8_t(rng() & 1);
    s.a[fmask] = 0;  // the channel input bit

    // b = a G_m: b[u] = xor of a[g] over g subset of u
    s.b = s.a;
    for (int j = 0; j < m; ++j) {
        size_t bit = size_t(1) << j;
        for (size_t u = 0; u < n; ++u)
            if (u & bit) s.b[u] ^= s.b[u ^ bit];
    }

    // transmit every codeword bit; keep only the per-position likelihood pairs
    s.alpha.resize(n);
    s.beta.resize(n);
    size_t K = W.alphabet_size();
    for (size_t u = 0; u < n; ++u) {
        double r = uniform01(rng);
        const std::vector<double>& row = s.b[u] ? W.p1() : W.p0();
        size_t y = K - 1;
        double acc = 0.0;
        for (size_t sym = 0; sym + 1 < K; ++sym) {
            acc += row[sym];
            if (r < acc) {
                y = sym;
                break;
            }
        }
        s.alpha[u] = W.p0(y);
        s.beta[u] = W.p1(y);
    }

    // fold down: minus levels marginalize the unknown low block, plus
    // levels consume the revealed high block through its encoding
    for (int level = m; level >= 1; --level) {
        size_t half = size_t(1) << (level - 1);
        bool is_minus = (fmask >> (level - 1)) & 1u;
        s.na.resize(half);
        s.nb.resize(half);
        if (is_minus) {
            for (size_t u = 0; u < half; ++u) {
                double a1 = s.alpha[u], b1 = s.beta[u];
                double a2 = s.alpha[u + half], b2 = s.beta[u + half];
                double pa = 0.5 * (a1 * a2 + b1 * b2);
                double pb = 0.5 * (a1 * b2 + b1 * a2);
                double scale = pa + pb;
                if (scale > 0.0) {
                    pa /= scale;
                    pb /= scale;
                }
                s.na[u] = pa;
                s.nb[u] = pb;
            }
            // the high message block becomes the next level's message
            for (size_t h = 0; h < half; ++h) s.a[h] = s.a[h + half];
        } else {
            // w = (high block) G_{level-1}, all revealed bits
            for (size_t h = 0; h < half; ++h) s.b[h] = s.a[h + half];
            for (int j = 0; j < level - 1; ++j) {
                size_t bit = size_t(1) << j;
                for (size_t u = 0; u < half; ++u)
                    if (u & bit) s.b[u] ^= s.b[u ^ bit];
            }
            for (size_t u = 0; u < half; ++u) {
                double a1 = s.alpha[u], b1 = s.beta[u];
                double a2 = s.alpha[u + half], b2 = s.beta[u + half];
                double pa = s.b[u] ? a1 * b2 : a1 * a2;
                double pb = s.b[u] ? b1 * a2 : b1 * b2;
                double scale = pa + pb;
                if (scale > 0.0) {
                    pa /= scale;
                    pb /= scale;
                }
                s.na[u] = pa;
                s.nb[u] = pb;
            }
        }
        std::swap(s.alpha, s.na);
        std::swap(s.beta, s.nb);
        s.alpha.resize(half);
        s.beta.resize(half);
    }

    if (s.beta[0] == 0.0) return 0.0;
    return std::sqrt(s.beta[0] / s.alpha[0]);
}

}  // namespace

MonteCarloResult monte_carlo_bhattacharyya(const SymmetricChannel& W, const Monomial& g,
                                           uint64_t samples, uint64_t seed) {
    int m = g.var_count();
    if (m > kMatrixCapVars)
        throw CapError("Monte-Carlo simulation is capped at m <= " +
                       std::to_string(kMatrixCapVars));
    if (samples < 1) throw std::invalid_argument("sample count must be >= 1");

    // Fixed substream layout: results do not depend on how work would be
    // scheduled, only on the seed.
    constexpr uint64_t kStreams = 64;
    double sum = 0.0, sumsq = 0.0;
    ModelScratch scratch;
    for (uint64_t stream = 0; stream < kStreams; ++stream) {
        uint64_t count = samples / kStreams + (stream < samples % kStreams ? 1 : 0);
        if (count == 0) continue;
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(stream + 1)));
        double local = 0.0, local_sq = 0.0;
        for (uint64_t i = 0; i < count; ++i) {
            double x = simulate_one(W, g.mask(), m, rng, scratch);
            local += x;
            local_sq += x * x;
        }
        sum += local;
        sumsq += local_sq;
    }
    double n = double(samples);
    double mean = sum / n;
    double var = samples > 1 ? std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0)) : 0.0;
    return MonteCarloResult{mean, std::sqrt(var / n), samples};
}

}  // namespace decmon
