// dmc: construction and analysis of decreasing monomial codes and polar
// codes over explicit symmetric channels.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "decmon/channel.hpp"
#include "decmon/code.hpp"
#include "decmon/errors.hpp"
#include "decmon/gf2.hpp"
#include "decmon/lta.hpp"
#include "decmon/monomial.hpp"
#include "decmon/monomial_set.hpp"
#include "decmon/partition.hpp"
#include "decmon/polar.hpp"
#include "decmon/version.hpp"

using nlohmann::json;
using namespace decmon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

constexpr uint64_t kDefaultSeed = 20160301;

std::string fnv1a_digest(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return fnv1a_digest(ss.str());
}

json base_report() {
    json j;
    j["tool"] = "dmc";
    j["version"] = kVersion;
    return j;
}

void emit(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (auto it = report.begin(); it != report.end(); ++it)
        std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump())
                  << "\n";
}

std::string meta_for(const json& extra) {
    json meta = extra;
    meta["tool"] = "dmc";
    meta["version"] = kVersion;
    return meta.dump();
}

int cmd_construct(const std::string& channel_spec, int m, uint64_t k, const std::string& out_path,
                  bool as_json) {
    SymmetricChannel W = parse_channel_spec(channel_spec);
    auto ranking = rank_monomials(W, m);
    MonomialCode code = construct_polar(ranking, m, k);

    double worst_b = k > 0 ? ranking[k - 1].b : 0.0;
    json meta;
    meta["channel"] = channel_spec;
    meta["k"] = k;
    if (k > 0) meta["worst_selected_b"] = worst_b;
    write_code_file(out_path, code, meta_for(meta));

    json report = base_report();
    report["m"] = m;
    report["k"] = k;
    report["channel"] = channel_spec;
    report["out"] = out_path;
    report["decreasing"] = code.decreasing();
    report["weakly_decreasing"] = code.weakly_decreasing();
    if (k > 0) report["worst_selected_b"] = worst_b;
    else report["warning"] = "k = 0 produces the zero code";
    report["output_digest"] = file_digest(out_path);
    emit(report, as_json);
    return kExitOk;
}

int cmd_analyze(const std::string& path, bool as_json) {
    MonomialCode code = read_code_file(path);
    json report = base_report();
    report["input"] = path;
    report["input_digest"] = file_digest(path);
    report["m"] = code.var_count();
    report["length"] = code.length();
    report["dimension"] = code.dimension();
    report["decreasing"] = code.decreasing();
    report["weakly_decreasing"] = code.weakly_decreasing();
    if (code.decreasing() && !code.monomials().empty()) {
        report["r_plus"] = r_plus(code);
        report["r_minus"] = r_minus(code);
        report["min_distance"] = min_distance(code);
        report["min_weight_count"] = min_weight_count(code).str();
        if (code.dimension() * 2 <= code.length())
            report["weakly_self_dual"] = weakly_self_dual(code);
    } else {
        report["formulas"] =
            "skipped: distance/duality formulas require a nonempty decreasing monomial set";
    }
    emit(report, as_json);
    return kExitOk;
}

int cmd_dual(const std::string& path, const std::string& out_path, bool as_json) {
    MonomialCode code = read_code_file(path);
    MonomialCode d = dual(code);
    json report = base_report();
    report["input"] = path;
    report["input_digest"] = file_digest(path);
    report["dimension"] = d.dimension();
    report["decreasing"] = d.decreasing();
    if (!out_path.empty()) {
        json meta;
        meta["dual_of_digest"] = report["input_digest"];
        write_code_file(out_path, d, meta_for(meta));
        report["out"] = out_path;
    } else {
        report["monomials"] = d.monomials().masks();
    }
    emit(report, as_json);
    return kExitOk;
}

int cmd_genmatrix(const std::string& path, int m_flag, const std::string& out_path) {
    BinaryMatrix M;
    if (!path.empty()) {
        MonomialCode code = read_code_file(path);
        M = generator_matrix(code.monomials());
    } else if (m_flag > 0) {
        M = kronecker_gm(m_flag);
    } else {
        throw std::invalid_argument("genmatrix needs a code file or --m");
    }
    if (out_path.empty()) {
        std::cout << M.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write: " + out_path);
        out << M.str();
    }
    return kExitOk;
}

int cmd_orbit(int m, const std::string& monomial_text, bool list, bool as_json) {
    Monomial g = Monomial::parse(m, monomial_text);
    json report = base_report();
    report["monomial"] = g.str();
    report["degree"] = g.degree();
    Partition lambda = young_partition(g);
    report["young_partition"] = lambda.parts;
    report["young_size"] = lambda.size();
    report["orbit_size"] = orbit_size(g).str();
    if (list) {
        auto orbit = orbit_enumerate(g);
        json arr = json::array();
        for (const auto& p : orbit) arr.push_back(p.str());
        report["orbit"] = arr;
    }
    emit(report, as_json);
    return kExitOk;
}

int cmd_closure(int m, const std::vector<std::string>& monomial_texts, const std::string& out_path,
                bool as_json) {
    std::vector<uint32_t> masks;
    for (const auto& t : monomial_texts) masks.push_back(Monomial::parse(m, t).mask());
    MonomialSet closed = decreasing_closure(MonomialSet(m, std::move(masks)));
    json report = base_report();
    report["m"] = m;
    report["size"] = closed.size();
    json arr = json::array();
    for (uint32_t mask : closed.masks()) arr.push_back(Monomial(m, mask).str());
    report["monomials"] = arr;
    if (!out_path.empty()) {
        write_code_file(out_path, MonomialCode(closed), meta_for(json{{"from", "closure"}}));
        report["out"] = out_path;
    }
    emit(report, as_json);
    return kExitOk;
}

int cmd_rank(const std::string& channel_spec, int m, bool as_json) {
    SymmetricChannel W = parse_channel_spec(channel_spec);
    auto ranking = rank_monomials(W, m);
    if (as_json) {
        json report = base_report();
        report["channel"] = channel_spec;
        report["m"] = m;
        json arr = json::array();
        for (const auto& r : ranking)
            arr.push_back({{"monomial", Monomial(m, r.mask).str()},
                           {"mask", r.mask},
                           {"b", r.b}});
        report["ranking"] = arr;
        std::cout << report.dump(2) << "\n";
    } else {
        for (const auto& r : ranking)
            std::cout << Monomial(m, r.mask).str() << "\t" << r.b << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const std::string& channel_spec, int m, const std::string& monomial_text,
                 uint64_t samples, uint64_t seed, bool as_json) {
    SymmetricChannel W = parse_channel_spec(channel_spec);
    Monomial g = Monomial::parse(m, monomial_text);
    MonteCarloResult r = monte_carlo_bhattacharyya(W, g, samples, seed);
    json report = base_report();
    report["channel"] = channel_spec;
    report["monomial"] = g.str();
    report["sign_sequence"] = sign_sequence(g).str();
    report["samples"] = samples;
    report["seed"] = seed;
    report["estimate"] = r.estimate;
    report["std_error"] = r.std_error;
    try {
        double exact = synthesize_bit_channel(W, g).bhattacharyya();
        report["exact"] = exact;
        if (r.std_error > 0.0)
            report["deviation_sigma"] = std::abs(r.estimate - exact) / r.std_error;
    } catch (const CapError&) {
        report["exact"] = nullptr;  // synthesis over cap; estimate stands alone
    }
    emit(report, as_json);
    return kExitOk;
}

// Every formula-vs-oracle comparison available at the input's size.  Exit
// 0 iff all pass.
int cmd_verify(const std::string& path, uint64_t seed, bool as_json) {
    MonomialCode code = read_code_file(path);
    json checks = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({{"check", name}, {"ok", ok}, {"detail", detail}});
        if (!ok) all_ok = false;
    };

    // dimension = |I| (rank oracle)
    if (code.var_count() <= 12 && !code.monomials().empty()) {
        size_t rank = rank_gf2(generator_matrix(code.monomials()));
        record("dimension-rank", rank == code.dimension(),
               "rank " + std::to_string(rank) + " vs |I| " + std::to_string(code.dimension()));
    }

    record("decreasing", code.decreasing(),
           code.decreasing() ? "monomial set is decreasing"
                             : "monomial set is NOT decreasing");

    if (code.decreasing() && !code.monomials().empty()) {
        // duality formula vs nullspace oracle
        if (code.var_count() <= 12) {
            MonomialCode d = dual(code);
            bool ok = true;
            std::string detail = "dual dimension " + std::to_string(d.dimension());
            if (d.dimension() > 0) {
                BinaryMatrix dual_gen = generator_matrix(d.monomials());
                BinaryMatrix null_basis = nullspace_basis(generator_matrix(code.monomials()));
                ok = row_space_equal(dual_gen, null_basis);
                detail = ok ? "row space equals nullspace" : "row space mismatch";
            }
            record("dual-nullspace", ok, detail);
            record("dual-involution", dual(d) == code, "dual of dual returns the code");
        }

        // distance and count formulas vs brute force
        if (code.dimension() <= 24 && code.var_count() <= 12) {
            auto brute = min_weight_bruteforce(code.monomials());
            uint64_t d_formula = min_distance(code);
            record("min-distance-bruteforce", brute.distance == d_formula,
                   "formula " + std::to_string(d_formula) + " vs brute " +
                       std::to_string(brute.distance));
            BigInt count_formula = min_weight_count(code);
            record("min-weight-count-bruteforce", brute.count == count_formula,
                   "formula " + count_formula.str() + " vs brute " + brute.count.str());
        }

        // orbit enumeration vs the closed-form count, on the maximal layer
        if (code.var_count() <= 12) {
            bool ok = true;
            std::string detail = "orbit sizes match the formula";
            int rp = r_plus(code);
            for (uint32_t mask : code.monomials().masks()) {
                Monomial g(code.var_count(), mask);
                if (g.degree() != rp) continue;
                if (g.degree() + young_size(g) > 16) continue;  // keep verify quick
                if (BigInt(orbit_enumerate(g).size()) != orbit_size(g)) {
                    ok = false;
                    detail = "orbit of " + g.str() + " has unexpected size";
                    break;
                }
            }
            record("orbit-size-formula", ok, detail);
        }

        // permutation-group containment on sampled maps
        if (code.var_count() <= 10 && !code.monomials().empty()) {
            BinaryMatrix gen = generator_matrix(code.monomials());
            bool ok = true;
            for (int t = 0; t < 20 && ok; ++t) {
                LtaMap map = random_lta(code.var_count(), seed + t);
                ok = row_space_equal(permute_columns(gen, coordinate_permutation(map)), gen);
            }
            record("lta-invariance", ok, "20 random lower-triangular affine maps");
        }
    }

    json report = base_report();
    report["input"] = path;
    report["input_digest"] = file_digest(path);
    report["checks"] = checks;
    report["ok"] = all_ok;
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        for (const auto& c : checks)
            std::cout << (c["ok"].get<bool>() ? "ok   " : "FAIL ") << c["check"].get<std::string>()
                      << " (" << c["detail"].get<std::string>() << ")\n";
        std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_ok ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decreasing monomial codes: polar construction, duality, orbits"};
    app.set_version_flag("--version", std::string("dmc ") + kVersion);
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    // let the global --json flag appear after a subcommand name too
    app.fallthrough();

    std::string channel_spec, code_path, out_path, monomial_text;
    std::vector<std::string> monomial_list;
    int m = 0;
    uint64_t k = 0, samples = 1000000, seed = kDefaultSeed;
    bool orbit_list = false;

    auto* construct = app.add_subcommand("construct", "build a polar code for a channel");
    construct->add_option("--channel", channel_spec, "bec:p, bsc:p or table:<path>")->required();
    construct->add_option("--m", m, "log2 of the code length")->required();
    construct->add_option("--k", k, "code dimension")->required();
    construct->add_option("--out", out_path, "output code file")->required();

    auto* analyze = app.add_subcommand("analyze", "report the parameters of a code file");
    analyze->add_option("code", code_path, "code JSON file")->required();

    auto* dual_cmd = app.add_subcommand("dual", "dual of a decreasing monomial code");
    dual_cmd->add_option("code", code_path, "code JSON file")->required();
    dual_cmd->add_option("--out", out_path, "output code file");

    auto* genmatrix = app.add_subcommand("genmatrix", "print a generator matrix as 0/1 text");
    genmatrix->add_option("code", code_path, "code JSON file");
    genmatrix->add_option("--m", m, "emit the full Kronecker matrix G_m instead");
    genmatrix->add_option("--out", out_path, "output file (default stdout)");

    auto* orbit = app.add_subcommand("orbit", "orbit of a monomial under the affine group");
    orbit->add_option("--m", m, "variable count")->required();
    orbit->add_option("--monomial", monomial_text, "monomial, e.g. x1*x4")->required();
    orbit->add_flag("--list", orbit_list, "also enumerate the orbit");

    auto* closure = app.add_subcommand("closure", "decreasing closure of a monomial set");
    closure->add_option("--m", m, "variable count")->required();
    closure->add_option("--monomial", monomial_list, "monomial (repeatable)")->required();
    closure->add_option("--out", out_path, "write the closure as a code file");

    auto* rank = app.add_subcommand("rank", "rank all bit channels by Bhattacharyya value");
    rank->add_option("--channel", channel_spec, "bec:p, bsc:p or table:<path>")->required();
    rank->add_option("--m", m, "number of polarization steps")->required();

    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo Bhattacharyya estimate");
    simulate->add_option("--channel", channel_spec, "bec:p, bsc:p or table:<path>")->required();
    simulate->add_option("--m", m, "variable count")->required();
    simulate->add_option("--monomial", monomial_text, "bit channel index")->required();
    simulate->add_option("--samples", samples, "sample count (default 10^6)");
    simulate->add_option("--seed", seed, "RNG seed");

    auto* verify = app.add_subcommand("verify", "run all formula-vs-oracle checks on a code");
    verify->add_option("code", code_path, "code JSON file")->required();
    verify->add_option("--seed", seed, "RNG seed for sampled checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(channel_spec, m, k, out_path, as_json);
        if (analyze->parsed()) return cmd_analyze(code_path, as_json);
        if (dual_cmd->parsed()) return cmd_dual(code_path, out_path, as_json);
        if (genmatrix->parsed()) return cmd_genmatrix(code_path, m, out_path);
        if (orbit->parsed()) return cmd_orbit(m, monomial_text, orbit_list, as_json);
        if (closure->parsed()) return cmd_closure(m, monomial_list, out_path, as_json);
        if (rank->parsed()) return cmd_rank(channel_spec, m, as_json);
        if (simulate->parsed()) return cmd_simulate(channel_spec, m, monomial_text, samples, seed, as_json);
        if (verify->parsed()) return cmd_verify(code_path, seed, as_json);
    } catch (const CapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
