// ekr-kit: exact construction and certification of the Schrijver/Wilson
// pseudoadjacency matrices of G(n,k,t), their spectral facts, and the
// resulting intersecting-family bounds.
#include <CLI11.hpp>
#include <json.hpp>

#include "ekr/families.hpp"
#include "ekr/matrix_io.hpp"
#include "ekr/pseudoadjacency.hpp"
#include "ekr/spectral.hpp"
#include "ekr/version.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::ordered_json;

// Exit codes: 0 verified/ok, 1 verification failed, 2 invalid input,
// 3 resource cap exceeded, 4 I/O failure.
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitIo = 4;

struct GlobalOptions {
    std::string format = "text";
    std::string out_path;
    std::size_t cap_override = 0; // 0 = use the per-command default
    std::string command_echo;

    std::size_t cap_or(std::size_t fallback) const {
        if (cap_override != 0) return cap_override;
        if (const char* env = std::getenv("EKR_KIT_CAP")) {
            const long value = std::atol(env);
            if (value > 0) return static_cast<std::size_t>(value);
        }
        return fallback;
    }
};

// Ordered key/value report rendered as stable text or JSON; identical
// invocations produce identical bytes except for the timing field.
class Report {
public:
    explicit Report(const GlobalOptions& options) : options_(options) {
        json_["command"] = options.command_echo;
        json_["version"] = ekr::kVersion;
    }

    void set(const std::string& key, const ordered_json& value) { json_[key] = value; }

    void finish(double timing_ms) { json_["timing_ms"] = timing_ms; }

    std::string render() const {
        if (options_.format == "json") {
            return json_.dump(2) + "\n";
        }
        std::ostringstream out;
        for (const auto& [key, value] : json_.items()) {
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
        }
        return out.str();
    }

private:
    const GlobalOptions& options_;
    ordered_json json_;
};

int emit(const GlobalOptions& options, const std::string& payload) {
    if (options.out_path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream out(options.out_path);
    if (!out) {
        std::cerr << "error: cannot open '" << options.out_path << "' for writing\n";
        return kExitIo;
    }
    out << payload;
    if (!out.good()) {
        std::cerr << "error: write to '" << options.out_path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

class Timer {
public:
    double elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json params_json(const ekr::SchemeParams& params) {
    return ordered_json{{"n", params.n}, {"k", params.k}, {"t", params.t}};
}

ordered_json basis_vector_json(const ekr::BasisVector& vec) {
    const char* prefix = vec.tag == ekr::BasisTag::A ? "A_" : "D_";
    ordered_json out = ordered_json::object();
    for (int index = vec.k; index >= 0; --index) {
        const auto it = vec.coeff.find(index);
        if (it != vec.coeff.end()) out[prefix + std::to_string(index)] = it->second.str();
    }
    return out;
}

int run_verify_equality(const GlobalOptions& options, int n_max, int k_max,
                        const std::string& mode_name) {
    Timer timer;
    const bool materialized = mode_name == "materialized";
    if (n_max <= 0 || k_max <= 0) {
        std::cerr << "error: empty sweep range\n";
        return kExitInvalidInput;
    }
    const std::size_t cap = options.cap_or(ekr::kDefaultMaterializeCap);

    Report report(options);
    report.set("mode", mode_name);
    report.set("n_max", n_max);
    report.set("k_max", k_max);

    ordered_json triples = ordered_json::array();
    int checked = 0;
    int failures = 0;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 2; k <= k_max; ++k) {
            if (n < 2 * k) continue;
            for (int t = 1; t < k; ++t) {
                const ekr::SchemeParams params(n, k, t);
                const ekr::EqualityReport result = ekr::verify_equality(
                    params,
                    materialized ? ekr::EqualityMode::materialized
                                 : ekr::EqualityMode::coefficients,
                    cap);
                ++checked;
                if (!result.equal) ++failures;
                ordered_json entry = params_json(params);
                entry["equal"] = result.equal;
                if (!result.equal) {
                    ordered_json mismatches = ordered_json::array();
                    for (const auto& mismatch : result.mismatches) {
                        mismatches.push_back(ordered_json{{"index", mismatch.index},
                                                          {"schrijver", mismatch.schrijver.str()},
                                                          {"wilson", mismatch.wilson.str()}});
                    }
                    entry["mismatches"] = mismatches;
                }
                triples.push_back(std::move(entry));
            }
        }
    }
    if (checked == 0) {
        std::cerr << "error: no valid (n,k,t) triples in range\n";
        return kExitInvalidInput;
    }
    report.set("triples_checked", checked);
    report.set("failures", failures);
    report.set("triples", triples);
    report.set("verdict", failures == 0 ? "all-equal" : "mismatch");
    report.finish(timer.elapsed_ms());
    const int io = emit(options, report.render());
    if (io != kExitOk) return io;
    return failures == 0 ? kExitOk : kExitVerificationFailed;
}

int run_coeffs(const GlobalOptions& options, const ekr::SchemeParams& params,
               const std::string& matrix_name, const std::string& basis_name) {
    Timer timer;
    const ekr::PseudoadjacencyDescriptor descriptor = matrix_name == "wilson"
                                                          ? ekr::wilson_descriptor(params)
                                                          : ekr::schrijver_descriptor(params);
    const ekr::BasisTag target = basis_name == "A" ? ekr::BasisTag::A : ekr::BasisTag::D;
    const ekr::BasisVector vec = ekr::convert(descriptor.coefficients, target);

    Report report(options);
    report.set("params", params_json(params));
    report.set("matrix", matrix_name);
    report.set("basis", basis_name);
    report.set("coefficients", basis_vector_json(vec));
    report.finish(timer.elapsed_ms());
    return emit(options, report.render());
}

int run_spectrum(const GlobalOptions& options, const ekr::SchemeParams& params) {
    Timer timer;
    const std::size_t cap = options.cap_or(ekr::kDefaultSpectralCap);
    const ekr::SpectralCertificate cert =
        ekr::certify_extremes(params, ekr::wilson_descriptor(params), cap);

    Report report(options);
    report.set("params", params_json(params));
    report.set("dimension", cert.dimension);
    report.set("row_sum_eigenvalue", cert.row_sum_eigenvalue.str());
    report.set("shifted_psd", cert.shifted_psd.psd() ? "psd" : "not_psd");
    report.set("shifted_rank", cert.shifted_rank);
    if (!cert.shifted_psd.psd()) {
        ordered_json witness = ordered_json::array();
        for (const auto& [index, value] : cert.shifted_psd.witness) {
            witness.push_back(ordered_json{{"index", index}, {"value", value.str()}});
        }
        report.set("shifted_witness", witness);
        report.set("shifted_witness_value", cert.shifted_psd.witness_value.str());
    }
    report.set("lambda_min", cert.lambda_min ? cert.lambda_min->str() : "uncertified");
    report.set("lambda_max", cert.lambda_max ? cert.lambda_max->str() : "uncertified");
    report.set("hoffman_bound", cert.hoffman ? ordered_json(cert.hoffman->str())
                                             : ordered_json(nullptr));
    report.set("certified", cert.fully_certified());
    report.finish(timer.elapsed_ms());
    const int io = emit(options, report.render());
    if (io != kExitOk) return io;
    return cert.fully_certified() ? kExitOk : kExitVerificationFailed;
}

int run_matrix(const GlobalOptions& options, const ekr::SchemeParams& params,
               const std::string& matrix_name) {
    const std::size_t cap = options.cap_or(ekr::kDefaultMaterializeCap);
    const ekr::PseudoadjacencyDescriptor descriptor = matrix_name == "wilson"
                                                          ? ekr::wilson_descriptor(params)
                                                          : ekr::schrijver_descriptor(params);
    const ekr::DenseRationalMatrix m = ekr::materialize(params, descriptor.coefficients, cap);
    std::ostringstream payload;
    ekr::write_matrix_coo(payload, m);
    return emit(options, payload.str());
}

int run_alpha(const GlobalOptions& options, const ekr::SchemeParams& params) {
    Timer timer;
    const std::size_t cap = options.cap_or(ekr::kDefaultAlphaCap);
    const ekr::AlphaResult result = ekr::brute_alpha(params, cap);

    Report report(options);
    report.set("params", params_json(params));
    report.set("alpha", result.alpha);
    report.set("star_size", ekr::binomial(params.n - params.t, params.k - params.t).get_str());
    ordered_json witness = ordered_json::array();
    for (const ekr::Subset& block : result.witness.blocks) {
        witness.push_back(block.elements());
    }
    report.set("witness", witness);
    report.finish(timer.elapsed_ms());
    return emit(options, report.render());
}

int run_inner_dist(const GlobalOptions& options, const std::string& family_path) {
    Timer timer;
    std::ifstream in(family_path);
    if (!in) {
        std::cerr << "error: cannot open family file '" << family_path << "'\n";
        return kExitIo;
    }
    const ekr::SetFamily family = ekr::read_family(in);
    const ekr::InnerDistribution dist = ekr::inner_distribution(family);

    Report report(options);
    report.set("family", family_path);
    report.set("n", family.n);
    report.set("k", family.k);
    report.set("blocks", family.size());
    ordered_json e = ordered_json::array();
    for (const ekr::Rational& x : dist.e) e.push_back(x.str());
    report.set("inner_distribution", e);
    report.finish(timer.elapsed_ms());
    return emit(options, report.render());
}

int run_designs(const GlobalOptions& options, const std::string& name, bool check) {
    Timer timer;
    const ekr::DesignRecord& record = ekr::design_registry(name);

    Report report(options);
    report.set("name", record.name);
    report.set("parameters", ordered_json{{"t", record.t},
                                          {"n", record.n},
                                          {"k", record.k},
                                          {"lambda", record.lambda}});
    report.set("blocks", record.family.size());
    bool all_match = true;
    if (check) {
        const ekr::DesignConsistencyReport consistency = ekr::design_consistency_check(record);
        all_match = consistency.all_match;
        ordered_json rows = ordered_json::array();
        for (const auto& row : consistency.rows) {
            rows.push_back(ordered_json{{"index", row.index},
                                        {"a", row.a.str()},
                                        {"e", row.e.str()},
                                        {"match", row.match}});
        }
        report.set("consistency", rows);
        report.set("all_match", all_match);
    }
    report.finish(timer.elapsed_ms());
    const int io = emit(options, report.render());
    if (io != kExitOk) return io;
    return all_match ? kExitOk : kExitVerificationFailed;
}

std::string join_args(int argc, char** argv) {
    std::string joined;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) joined += ' ';
        joined += argv[i];
    }
    return joined;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOptions options;
    options.command_echo = join_args(argc, argv);

    CLI::App app{"Exact Schrijver/Wilson pseudoadjacency matrices of G(n,k,t): "
                 "equality checks, spectral certificates, and family bounds"};
    app.require_subcommand(1);
    app.add_option("--format", options.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", options.out_path, "Write output to a file instead of stdout");
    app.add_option("--cap-n", options.cap_override,
                   "Override the size cap of the invoked operation");

    int n = 0, k = 0, t = 0;
    int n_max = 0, k_max = 0;
    std::string mode = "coefficients";
    std::string matrix_name = "wilson";
    std::string basis_name;
    std::string family_path;
    std::string design_name;
    bool design_check = false;

    CLI::App* verify = app.add_subcommand("verify-equality",
                                          "Sweep (n,k,t) and verify S(n,k,t) = Omega(n,k,t)");
    verify->add_option("--n-max", n_max, "Largest ground-set size (default depends on mode)");
    verify->add_option("--k-max", k_max, "Largest block size (default depends on mode)");
    verify->add_option("--mode", mode, "coefficients or materialized")
        ->check(CLI::IsMember({"coefficients", "materialized"}));

    CLI::App* coeffs = app.add_subcommand("coeffs", "Print descriptor coefficients in a basis");
    coeffs->add_option("--n", n)->required();
    coeffs->add_option("--k", k)->required();
    coeffs->add_option("--t", t)->required();
    coeffs->add_option("--matrix", matrix_name, "wilson or schrijver")
        ->check(CLI::IsMember({"wilson", "schrijver"}));
    coeffs->add_option("--basis", basis_name, "A or D (default: the native basis)")
        ->check(CLI::IsMember({"A", "D"}));

    CLI::App* spectrum = app.add_subcommand("spectrum", "Exact spectral certificate for Omega");
    spectrum->add_option("--n", n)->required();
    spectrum->add_option("--k", k)->required();
    spectrum->add_option("--t", t)->required();

    CLI::App* matrix = app.add_subcommand("matrix", "Write a dense matrix in rational-coo form");
    matrix->add_option("--n", n)->required();
    matrix->add_option("--k", k)->required();
    matrix->add_option("--t", t)->required();
    matrix->add_option("--matrix", matrix_name, "wilson or schrijver")
        ->check(CLI::IsMember({"wilson", "schrijver"}));

    CLI::App* alpha = app.add_subcommand("alpha", "Exhaustive independence number of G(n,k,t)");
    alpha->add_option("--n", n)->required();
    alpha->add_option("--k", k)->required();
    alpha->add_option("--t", t)->required();

    CLI::App* inner = app.add_subcommand("inner-dist", "Inner distribution of a family file");
    inner->add_option("--family", family_path, "Path to a family file")->required();

    CLI::App* designs = app.add_subcommand("designs", "Registered Steiner systems");
    designs->add_option("--name", design_name, "fano or sts9")->required();
    designs->add_flag("--check", design_check, "Compare the a-vector with the design");

    for (CLI::App* sub : {verify, coeffs, spectrum, matrix, alpha, inner, designs}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (verify->parsed()) {
            const bool materialized = mode == "materialized";
            if (verify->count("--n-max") == 0) n_max = materialized ? 12 : 24;
            if (verify->count("--k-max") == 0) k_max = materialized ? 5 : 8;
            return run_verify_equality(options, n_max, k_max, mode);
        }
        if (coeffs->parsed()) {
            if (basis_name.empty()) basis_name = matrix_name == "wilson" ? "D" : "A";
            return run_coeffs(options, ekr::SchemeParams(n, k, t), matrix_name, basis_name);
        }
        if (spectrum->parsed()) {
            return run_spectrum(options, ekr::SchemeParams(n, k, t));
        }
        if (matrix->parsed()) {
            return run_matrix(options, ekr::SchemeParams(n, k, t), matrix_name);
        }
        if (alpha->parsed()) {
            return run_alpha(options, ekr::SchemeParams(n, k, t));
        }
        if (inner->parsed()) {
            return run_inner_dist(options, family_path);
        }
        if (designs->parsed()) {
            return run_designs(options, design_name, design_check);
        }
    } catch (const ekr::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
