#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace decmon {

struct ChannelCaps {
    // Post-merge output alphabet limit.  Exceeding it is an error, never a
    // silent quantization.
    size_t alphabet_cap = size_t(1) << 20;
    // Pre-merge work limit: a transform of a K-symbol channel touches K^2
    // (minus) or 2 K^2 (plus) raw output pairs.
    uint64_t raw_pair_cap = uint64_t(1) << 26;
};

// A binary-input memoryless symmetric channel with a finite output
// alphabet: transition rows p0[y] = W(y|0), p1[y] = W(y|1) and a
// symmetry involution pi with W(y|1) = W(pi(y)|0) holding exactly as
// stored.
class SymmetricChannel {
public:
    SymmetricChannel(std::vector<double> p0, std::vector<double> p1,
                     std::vector<uint32_t> involution);

    size_t alphabet_size() const { return p0_.size(); }
    double p0(size_t y) const { return p0_[y]; }
    double p1(size_t y) const { return p1_[y]; }
    uint32_t involution(size_t y) const { return inv_[y]; }
    const std::vector<double>& p0() const { return p0_; }
    const std::vector<double>& p1() const { return p1_; }
    const std::vector<uint32_t>& involution() const { return inv_; }

    // B(W) = sum_y sqrt(W(y|0) W(y|1)), always in [0, 1].
    double bhattacharyya() const;

    // Re-checks normalization (1e-12), the involution being an involution,
    // and the stored-value symmetry.  Called after every transform.
    void validate(double tol = 1e-12) const;

private:
    std::vector<double> p0_, p1_;
    std::vector<uint32_t> inv_;
};

// Erasure channel with alphabet {0, ?, 1}; pi swaps 0 and 1, fixes ?.
SymmetricChannel make_bec(double p);
// Crossover channel with alphabet {0, 1}; pi swaps.
SymmetricChannel make_bsc(double p);

// Arikan transforms.  Outputs whose likelihood pairs are proportional
// (cross-multiplication test at relative 1e-9) are merged, which
// preserves the Bhattacharyya parameter exactly; zero-probability
// symbols are dropped.
SymmetricChannel transform_minus(const SymmetricChannel& W, const ChannelCaps& caps = {});
SymmetricChannel transform_plus(const SymmetricChannel& W, const ChannelCaps& caps = {});

// "bec:0.5", "bsc:0.11", or "table:<path>" with a JSON file
// {"alphabet": n, "p0": [...], "p1": [...], "involution": [...]}.
SymmetricChannel parse_channel_spec(const std::string& spec);

}  // namespace decmon
