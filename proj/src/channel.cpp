#include "decmon/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "decmon/errors.hpp"

namespace decmon {

// Two output symbols are merged when their likelihood pairs are
// proportional under a cross-multiplication test at this relative
// tolerance.  Proportional pairs sum without changing B.
static constexpr double kMergeTol = 1e-9;

namespace {

double kahan_sum(const std::vector<double>& v) {
    double s = 0.0, comp = 0.0;
    for (double x : v) {
        double y = x - comp;
        double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

}  // namespace

SymmetricChannel::SymmetricChannel(std::vector<double> p0, std::vector<double> p1,
                                   std::vector<uint32_t> involution)
    : p0_(std::move(p0)), p1_(std::move(p1)), inv_(std::move(involution)) {
    if (p0_.size() != p1_.size() || p0_.size() != inv_.size())
        throw std::invalid_argument("channel arrays must have equal length");
    if (p0_.empty()) throw std::invalid_argument("channel alphabet is empty");
    validate();
}

double SymmetricChannel::bhattacharyya() const {
    std::vector<double> terms(p0_.size());
    for (size_t y = 0; y < p0_.size(); ++y) terms[y] = std::sqrt(p0_[y] * p1_[y]);
    return kahan_sum(terms);
}

void SymmetricChannel::validate(double tol) const {
    size_t n = p0_.size();
    for (size_t y = 0; y < n; ++y) {
        if (!(p0_[y] >= 0.0) || !(p1_[y] >= 0.0))
            throw std::invalid_argument("channel probabilities must be nonnegative");
        if (inv_[y] >= n) throw std::invalid_argument("involution index out of range");
        if (inv_[inv_[y]] != y) throw std::invalid_argument("involution is not an involution");
        if (p1_[y] != p0_[inv_[y]])
            throw std::invalid_argument("channel symmetry W(y|1) = W(pi(y)|0) violated");
    }
    if (std::abs(kahan_sum(p0_) - 1.0) > tol || std::abs(kahan_sum(p1_) - 1.0) > tol)
        throw std::invalid_argument("channel rows must sum to 1");
}

SymmetricChannel make_bec(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erasure probability must be in [0,1]");
    // alphabet {0, ?, 1}; pi swaps 0 and 1, fixes the erasure
    return SymmetricChannel({1.0 - p, p, 0.0}, {0.0, p, 1.0 - p}, {2, 1, 0});
}

SymmetricChannel make_bsc(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("crossover probability must be in [0,1]");
    return SymmetricChannel({1.0 - p, p}, {p, 1.0 - p}, {1, 0});
}

namespace {

struct LrClass {
    // log2(c) - log2(a): monotone in the likelihood ratio and, unlike
    // a/(a+c), never saturates for extreme ratios; the key of the
    // (a,c)-swapped pair is exactly the negation, so sorting ascending
    // puts every class and its mirror partner at reflected positions.
    double key;
    double a, c;
    double a_comp = 0.0, c_comp = 0.0;  // Kahan compensation while accumulating
};

double lr_key(double a, double c) { return std::log2(c) - std::log2(a); }

bool proportional(double ax, double cx, double ay, double cy) {
    double l = ax * cy, r = ay * cx;
    return std::abs(l - r) <= kMergeTol * std::max(l, r);
}

// Sorts entries by likelihood-ratio key and collapses runs of
// proportional pairs into summed classes.
void group_into(std::vector<LrClass>& entries, std::vector<LrClass>& out) {
    std::sort(entries.begin(), entries.end(),
              [](const LrClass& l, const LrClass& r) { return l.key < r.key; });
    for (size_t i = 0; i < entries.size();) {
        LrClass cls{entries[i].key, entries[i].a, entries[i].c, 0.0, 0.0};
        size_t j = i + 1;
        while (j < entries.size() &&
               proportional(entries[i].a, entries[i].c, entries[j].a, entries[j].c)) {
            double y = entries[j].a - cls.a_comp;
            double t = cls.a + y;
            cls.a_comp = (t - cls.a) - y;
            cls.a = t;
            y = entries[j].c - cls.c_comp;
            t = cls.c + y;
            cls.c_comp = (t - cls.c) - y;
            cls.c = t;
            ++j;
        }
        cls.key = lr_key(cls.a, cls.c);
        out.push_back(cls);
        i = j;
    }
    entries.clear();
}

// Streams raw (a, c) output pairs through chunked sort-and-group passes,
// so a K^2-sized raw alphabet never has to be materialized at once.
class Merger {
public:
    explicit Merger(const ChannelCaps& caps) : caps_(caps) {
        chunk_.reserve(kChunk);
    }

    void add(double a, double c) {
        if (a == 0.0 && c == 0.0) return;  // dead symbol
        chunk_.push_back(LrClass{lr_key(a, c), a, c});
        if (chunk_.size() >= kChunk) flush();
    }

    std::vector<LrClass> finish() {
        flush();
        std::vector<LrClass> out;
        group_into(partial_, out);
        return out;
    }

private:
    void flush() {
        group_into(chunk_, partial_);
        chunk_.reserve(kChunk);
        if (partial_.size() > kCompactAt) {
            std::vector<LrClass> compacted;
            group_into(partial_, compacted);
            partial_ = std::move(compacted);
            if (partial_.size() > 4 * caps_.alphabet_cap)
                throw CapError("merged output alphabet exceeds the cap of " +
                               std::to_string(caps_.alphabet_cap) + " symbols");
        }
    }

    static constexpr size_t kChunk = size_t(1) << 22;
    static constexpr size_t kCompactAt = size_t(1) << 23;
    const ChannelCaps& caps_;
    std::vector<LrClass> chunk_;
    std::vector<LrClass> partial_;
};

// Accumulates the raw output pairs of a transform and builds the merged
// channel.  The raw pair multiset is exactly closed under the (a,c) swap
// (products and sums of the stored probabilities commute bitwise), so
// only the likelihood-ratio-below-1 half is grouped; the above-1 half is
// its mirror by construction, and self-symmetric symbols form one middle
// class.  This keeps the class partition exactly mirror-symmetric even
// when tolerance-boundary chains would otherwise group differently on
// the two sides.  The dropped half is still counted and mass-checked.
class SplitMerger {
public:
    explicit SplitMerger(const ChannelCaps& caps) : neg_(caps) {}

    void add(double a, double c) {
        if (a == 0.0 && c == 0.0) return;  // dead symbol
        double key = lr_key(a, c);
        if (key < 0.0) {
            ++neg_count_;
            neg_.add(a, c);
        } else if (key > 0.0) {
            ++pos_count_;
            kahan_add(pos_a_, pos_a_comp_, a);
            kahan_add(pos_c_, pos_c_comp_, c);
        } else {
            kahan_add(mid_a_, mid_a_comp_, a);
            kahan_add(mid_c_, mid_c_comp_, c);
            has_mid_ = true;
        }
    }

    SymmetricChannel build(const ChannelCaps& caps) {
        std::vector<LrClass> low = neg_.finish();
        if (neg_count_ != pos_count_)
            throw std::runtime_error("channel symmetry lost during merging (symbol counts)");
        double low_a = 0.0, low_c = 0.0, comp_a = 0.0, comp_c = 0.0;
        for (const LrClass& cls : low) {
            kahan_add(low_a, comp_a, cls.a);
            kahan_add(low_c, comp_c, cls.c);
        }
        if (std::abs(low_a - pos_c_) > 1e-12 || std::abs(low_c - pos_a_) > 1e-12)
            throw std::runtime_error("channel symmetry lost during merging (mass mismatch)");

        size_t n = 2 * low.size() + (has_mid_ ? 1 : 0);
        if (n > caps.alphabet_cap)
            throw CapError("merged output alphabet has " + std::to_string(n) +
                           " symbols, exceeding the cap of " + std::to_string(caps.alphabet_cap));
        std::vector<double> p0(n), p1(n);
        std::vector<uint32_t> inv(n);
        for (size_t k = 0; k < low.size(); ++k) {
            p0[k] = low[k].a;
            p0[n - 1 - k] = low[k].c;  // the mirrored class, exact
        }
        if (has_mid_) {
            if (std::abs(mid_a_ - mid_c_) > 1e-12)
                throw std::runtime_error("channel symmetry lost during merging (middle class)");
            p0[low.size()] = mid_a_;
        }
        for (size_t k = 0; k < n; ++k) {
            inv[k] = uint32_t(n - 1 - k);
            p1[k] = p0[n - 1 - k];
        }
        SymmetricChannel out(std::move(p0), std::move(p1), std::move(inv));
        out.validate();
        return out;
    }

private:
    static void kahan_add(double& sum, double& comp, double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    Merger neg_;
    uint64_t neg_count_ = 0, pos_count_ = 0;
    double pos_a_ = 0.0, pos_c_ = 0.0, pos_a_comp_ = 0.0, pos_c_comp_ = 0.0;
    double mid_a_ = 0.0, mid_c_ = 0.0, mid_a_comp_ = 0.0, mid_c_comp_ = 0.0;
    bool has_mid_ = false;
};

void check_raw_cap(uint64_t raw, const ChannelCaps& caps) {
    if (raw > caps.raw_pair_cap)
        throw CapError("transform would touch " + std::to_string(raw) +
                       " raw output pairs, exceeding the cap of " +
                       std::to_string(caps.raw_pair_cap));
}

}  // namespace

SymmetricChannel transform_minus(const SymmetricChannel& W, const ChannelCaps& caps) {
    uint64_t K = W.alphabet_size();
    check_raw_cap(K * K, caps);
    SplitMerger merger(caps);
    // W-(y1,y2|u) = 1/2 sum_v W(y1|v) W(y2|v+u); involution (y1,y2) -> (pi(y1),y2)
    for (uint64_t y2 = 0; y2 < K; ++y2) {
        double q0 = W.p0(y2), q1 = W.p1(y2);
        for (uint64_t y1 = 0; y1 < K; ++y1) {
            double a = 0.5 * (W.p0(y1) * q0 + W.p1(y1) * q1);
            double c = 0.5 * (W.p0(y1) * q1 + W.p1(y1) * q0);
            merger.add(a, c);
        }
    }
    return merger.build(caps);
}

SymmetricChannel transform_plus(const SymmetricChannel& W, const ChannelCaps& caps) {
    uint64_t K = W.alphabet_size();
    check_raw_cap(2 * K * K, caps);
    SplitMerger merger(caps);
    // W+(y1,y2,u2|u1) = 1/2 W(y1|u1) W(y2|u1+u2)
    for (uint64_t y2 = 0; y2 < K; ++y2) {
        double q0 = W.p0(y2), q1 = W.p1(y2);
        for (uint64_t y1 = 0; y1 < K; ++y1) {
            merger.add(0.5 * W.p0(y1) * q0, 0.5 * W.p1(y1) * q1);  // u2 = 0
            merger.add(0.5 * W.p0(y1) * q1, 0.5 * W.p1(y1) * q0);  // u2 = 1
        }
    }
    return merger.build(caps);
}

SymmetricChannel parse_channel_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("channel spec must look like bec:0.5, bsc:0.11 or table:<path>");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "bec") return make_bec(std::stod(rest));
    if (kind == "bsc") return make_bsc(std::stod(rest));
    if (kind == "table") {
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("cannot open channel table: " + rest);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed channel table: ") + e.what());
        }
        std::vector<double> p0 = j.at("p0").get<std::vector<double>>();
        std::vector<double> p1 = j.at("p1").get<std::vector<double>>();
        std::vector<uint32_t> inv = j.at("involution").get<std::vector<uint32_t>>();
        if (j.contains("alphabet") && j["alphabet"].get<size_t>() != p0.size())
            throw std::invalid_argument("channel table alphabet size mismatch");
        return SymmetricChannel(std::move(p0), std::move(p1), std::move(inv));
    }
    throw std::invalid_argument("unknown channel kind: " + kind);
}

}  // namespace decmon
