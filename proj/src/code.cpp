#include "decmon/code.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "decmon/errors.hpp"
#include "decmon/partition.hpp"

namespace decmon {

MonomialCode::MonomialCode(MonomialSet I)
    : I_(std::move(I)),
      decreasing_(is_decreasing(I_)),
      weakly_decreasing_(is_weakly_decreasing(I_)) {}

MonomialCode MonomialCode::reed_muller(int r, int m) {
    if (r < 0 || r > m) throw std::invalid_argument("reed_muller requires 0 <= r <= m");
    std::vector<uint32_t> masks;
    for (uint32_t g = 0; g < (uint32_t(1) << m); ++g)
        if (std::popcount(g) <= r) masks.push_back(g);
    return MonomialCode(MonomialSet(m, std::move(masks)));
}

static void require_decreasing(const MonomialCode& code, const char* op) {
    if (!code.decreasing())
        throw std::domain_error(std::string(op) + " requires a decreasing monomial set");
}

static void require_nonempty(const MonomialCode& code, const char* op) {
    if (code.monomials().empty())
        throw std::domain_error(std::string(op) + " is undefined for the zero code");
}

MonomialCode dual(const MonomialCode& code) {
    require_decreasing(code, "duality formula");
    int m = code.var_count();
    if (m > kMaxExhaustiveVars)
        throw CapError("dual set enumeration is capped at m <= " +
                       std::to_string(kMaxExhaustiveVars));
    uint32_t full = (uint32_t(1) << m) - 1u;
    std::vector<bool> in_complemented(size_t(1) << m, false);
    for (uint32_t f : code.monomials().masks()) in_complemented[f ^ full] = true;
    std::vector<uint32_t> out;
    for (uint32_t g = 0; g <= full; ++g)
        if (!in_complemented[g]) out.push_back(g);
    return MonomialCode(MonomialSet(m, std::move(out)));
}

int r_plus(const MonomialCode& code) {
    require_decreasing(code, "r_plus");
    require_nonempty(code, "r_plus");
    int m = code.var_count();
    for (int r = m; r >= 1; --r) {
        uint32_t prefix = (uint32_t(1) << r) - 1u;  // x_0...x_{r-1}
        if (code.monomials().contains(prefix)) return r;
    }
    return 0;  // the constant monomial is in any nonempty decreasing set
}

int r_minus(const MonomialCode& code) {
    require_decreasing(code, "r_minus");
    require_nonempty(code, "r_minus");
    int m = code.var_count();
    for (int r = m; r >= 1; --r) {
        uint32_t suffix = ((uint32_t(1) << r) - 1u) << (m - r);  // x_{m-r}...x_{m-1}
        if (code.monomials().contains(suffix)) return r;
    }
    return 0;
}

uint64_t min_distance(const MonomialCode& code) {
    return uint64_t(1) << (code.var_count() - r_plus(code));
}

DualParameters dual_parameters(const MonomialCode& code) {
    require_decreasing(code, "dual_parameters");
    require_nonempty(code, "dual_parameters");
    int m = code.var_count();
    int rp = r_plus(code);
    int rm = r_minus(code);
    if (rp == m)
        throw std::domain_error("dual parameters are undefined for the full code (zero dual)");
    return DualParameters{m - 1 - rp, m - 1 - rm, uint64_t(1) << (rm + 1)};
}

bool weakly_self_dual(const MonomialCode& code) {
    require_decreasing(code, "weakly_self_dual");
    int m = code.var_count();
    if (code.dimension() > (size_t(1) << (m - 1)))
        throw std::domain_error("condition requires rate <= 1/2");
    uint32_t full = (uint32_t(1) << m) - 1u;
    for (uint32_t f : code.monomials().masks())
        if (code.monomials().contains(f ^ full)) return false;
    return true;
}

BigInt min_weight_count(const MonomialCode& code) {
    require_decreasing(code, "min_weight_count");
    require_nonempty(code, "min_weight_count");
    int m = code.var_count();
    int rp = r_plus(code);
    BigInt sum = 0;
    for (uint32_t f : code.monomials().masks()) {
        Monomial g(m, f);
        if (g.degree() == rp) sum += pow2(young_size(g));
    }
    return pow2(rp) * sum;
}

std::string code_to_json(const MonomialCode& code, const std::string& meta_json) {
    nlohmann::json j;
    j["m"] = code.var_count();
    j["monomials"] = code.monomials().masks();  // already sorted ascending
    j["meta"] = nlohmann::json::parse(meta_json);
    return j.dump(2) + "\n";
}

MonomialCode code_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed code file: ") + e.what());
    }
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw std::invalid_argument("malformed code file: missing integer field \"m\"");
    if (!j.contains("monomials") || !j["monomials"].is_array())
        throw std::invalid_argument("malformed code file: missing array field \"monomials\"");
    int m = j["m"].get<int>();
    std::vector<uint32_t> masks;
    for (const auto& v : j["monomials"]) {
        if (!v.is_number_unsigned() && !v.is_number_integer())
            throw std::invalid_argument("malformed code file: monomials must be integers");
        long long x = v.get<long long>();
        if (x < 0) throw std::invalid_argument("malformed code file: negative monomial");
        masks.push_back(static_cast<uint32_t>(x));
    }
    return MonomialCode(MonomialSet(m, std::move(masks)));
}

MonomialCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return code_from_json(ss.str());
}

void write_code_file(const std::string& path, const MonomialCode& code,
                     const std::string& meta_json) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write code file: " + path);
    out << code_to_json(code, meta_json);
}

}  // namespace decmon
