#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ekr/matrix_io.hpp"
#include "ekr/pseudoadjacency.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(EKR_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return RunResult{exit_code, output};
}

std::string strip_timing(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("timing_ms") == std::string::npos) out << line << "\n";
    }
    return out.str();
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ekr_cli_test_" + name);
}

} // namespace

TEST_CASE("verify-equality sweeps cleanly in a small range") {
    const RunResult r = run_cli("verify-equality --n-max 10 --k-max 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verdict: all-equal") != std::string::npos);
}

TEST_CASE("verify-equality materialized mode") {
    const RunResult r = run_cli("verify-equality --n-max 7 --k-max 3 --mode materialized");
    CHECK(r.exit_code == 0);
}

TEST_CASE("empty sweep range is invalid input") {
    CHECK(run_cli("verify-equality --n-max 0 --k-max 3").exit_code == 2);
    CHECK(run_cli("verify-equality --n-max 3 --k-max 2").exit_code == 2); // no triple fits
}

TEST_CASE("unknown flags and bad triples exit 2") {
    CHECK(run_cli("verify-equality --bogus 1").exit_code == 2);
    CHECK(run_cli("coeffs --n 7 --k 3 --t 5").exit_code == 2);
    CHECK(run_cli("coeffs --n 7 --k 4 --t 2").exit_code == 2); // n < 2k
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("coeffs: Wilson and converted Schrijver agree") {
    const RunResult wilson = run_cli("coeffs --n 7 --k 3 --t 2 --matrix wilson --basis D");
    CHECK(wilson.exit_code == 0);
    CHECK(wilson.output.find("\"D_3\": \"-1\"") == std::string::npos); // text mode by default
    CHECK(wilson.output.find("D_3") != std::string::npos);

    const RunResult wilson_json =
        run_cli("coeffs --n 7 --k 3 --t 2 --matrix wilson --basis D --format json");
    const RunResult schrijver_json =
        run_cli("coeffs --n 7 --k 3 --t 2 --matrix schrijver --basis D --format json");
    const auto w = nlohmann::json::parse(wilson_json.output);
    const auto s = nlohmann::json::parse(schrijver_json.output);
    CHECK(w["coefficients"]["D_3"] == "-1");
    CHECK(w["coefficients"]["D_2"] == "1/3");
    CHECK(w["coefficients"] == s["coefficients"]);

    const RunResult a_basis =
        run_cli("coeffs --n 5 --k 2 --t 1 --matrix schrijver --basis A --format json");
    const auto a = nlohmann::json::parse(a_basis.output);
    CHECK(a["coefficients"]["A_2"] == "1/2");
}

TEST_CASE("json reports parse and use the p/q grammar throughout") {
    const RunResult r = run_cli("spectrum --n 7 --k 3 --t 2 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["version"] == "0.1.0");
    const std::regex grammar("^-?[0-9]+(/[0-9]+)?$");
    for (const char* key : {"row_sum_eigenvalue", "lambda_min", "lambda_max", "hoffman_bound"}) {
        const std::string value = doc[key].get<std::string>();
        CHECK(std::regex_match(value, grammar));
    }
    CHECK(doc["lambda_max"] == "6");
    CHECK(doc["lambda_min"] == "-1");
    CHECK(doc["hoffman_bound"] == "5");
    CHECK(doc["shifted_rank"] == 15);
    CHECK(doc["certified"] == true);
}

TEST_CASE("spectrum exit codes separate verdicts from caps") {
    CHECK(run_cli("spectrum --n 7 --k 3 --t 2").exit_code == 0);
    CHECK(run_cli("spectrum --n 8 --k 4 --t 2").exit_code == 1);  // below EKR threshold
    CHECK(run_cli("spectrum --n 20 --k 10 --t 2").exit_code == 3); // C(20,10) over cap
}

TEST_CASE("reports are byte-identical modulo the timing field") {
    for (const char* args :
         {"spectrum --n 7 --k 3 --t 2 --format json", "alpha --n 5 --k 2 --t 1",
          "coeffs --n 9 --k 3 --t 2 --matrix wilson"}) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        CHECK(strip_timing(first.output) == strip_timing(second.output));
    }
}

TEST_CASE("matrix subcommand emits a parseable file") {
    const auto path = temp_path("omega521.coo");
    const RunResult r =
        run_cli("matrix --n 5 --k 2 --t 1 --matrix wilson --out " + path.string());
    CHECK(r.exit_code == 0);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "rational-coo 10 10 15");
    in.seekg(0);
    const ekr::DenseRationalMatrix parsed = ekr::read_matrix_coo(in);
    const ekr::SchemeParams p(5, 2, 1);
    CHECK(parsed == ekr::materialize(p, ekr::wilson_descriptor(p).coefficients));
    std::filesystem::remove(path);
}

TEST_CASE("matrix to an unwritable path fails with the I/O code") {
    CHECK(run_cli("matrix --n 5 --k 2 --t 1 --out /nonexistent-dir/x.coo").exit_code == 4);
}

TEST_CASE("alpha reports the star witness") {
    const RunResult r = run_cli("alpha --n 7 --k 3 --t 2 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["alpha"] == 5);
    CHECK(doc["star_size"] == "5");
    CHECK(doc["witness"].size() == 5);
    CHECK(doc["witness"][0] == nlohmann::json::array({1, 2, 3}));
}

TEST_CASE("alpha over the cap advises the certificate route") {
    CHECK(run_cli("alpha --n 9 --k 4 --t 2").exit_code == 3);
}

TEST_CASE("inner-dist reads a family file") {
    const auto path = temp_path("fano.blocks");
    {
        std::ofstream out(path);
        out << "# fano\n"
               "n=7 k=3\n"
               "1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n";
    }
    const RunResult r = run_cli("inner-dist --family " + path.string() + " --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["inner_distribution"] == nlohmann::json::array({"1", "0", "6", "0"}));
    std::filesystem::remove(path);

    CHECK(run_cli("inner-dist --family /no/such/file").exit_code == 4);
}

TEST_CASE("designs command with consistency check") {
    const RunResult r = run_cli("designs --name sts9 --check --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["all_match"] == true);
    CHECK(doc["blocks"] == 12);

    CHECK(run_cli("designs --name unknown").exit_code == 2);
}

TEST_CASE("cap override via flag and environment") {
    CHECK(run_cli("alpha --n 7 --k 3 --t 2 --cap-n 10").exit_code == 3);
    const std::string env_cmd = std::string("EKR_KIT_CAP=10 ") + EKR_CLI_PATH +
                                " alpha --n 7 --k 3 --t 2 2>/dev/null >/dev/null";
    const int status = std::system(env_cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
}
