#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

const std::string kCli = SPINCAV_CLI_PATH;
const std::string kBaseline = std::string(SPINCAV_CONFIG_DIR) + "/baseline.json";

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string command = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("entangle: exit 0 and a non-negative E_N") {
    const RunResult r = run("entangle -c " + kBaseline);
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["log_negativity"].get<double>() >= 0.0);
    CHECK(j["manifest"]["subcommand"] == "entangle");
}

TEST_CASE("resonance: two branch pairs listed") {
    const RunResult r = run("resonance -c " + kBaseline);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["branches"].size() == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("entangle --no-such-flag -c " + kBaseline).exit_code == 2);
    CHECK(run("no-such-subcommand").exit_code == 2);
    CHECK(run("entangle").exit_code == 2);  // missing required config
}

TEST_CASE("computational errors exit 1 with a JSON error object") {
    // delta_a = delta_F makes the resonance condition degenerate
    const std::string bad = "/tmp/spincav_test_degenerate.json";
    {
        json config = json::parse(std::ifstream(kBaseline));
        config["delta_a_MHz"] = 1.0;
        std::ofstream out(bad);
        out << config.dump();
    }
    const RunResult r = run("resonance -c " + bad);
    CHECK(r.exit_code == 1);
    const json j = json::parse(r.output);
    CHECK(j["error"]["status"] == "domain_error");
    CHECK(!j["error"]["message"].get<std::string>().empty());
}

TEST_CASE("config errors exit 1 and name the field") {
    const std::string bad = "/tmp/spincav_test_badfield.json";
    {
        json config = json::parse(std::ifstream(kBaseline));
        config["kappa_a_MHz"] = 0.0;
        std::ofstream out(bad);
        out << config.dump();
    }
    const RunResult r = run("stability -c " + bad);
    CHECK(r.exit_code == 1);
    const json j = json::parse(r.output);
    CHECK(j["error"]["status"] == "config_error");
    CHECK(j["error"]["message"].get<std::string>().find("kappa_a") !=
          std::string::npos);
}

TEST_CASE("sweep --help lists every preset") {
    const RunResult r = run("sweep --help");
    CHECK(r.exit_code == 0);
    for (const char* name : {"fig1a", "fig1f", "fig2a", "fig3b", "fig4d", "fig5a",
                             "fig6c", "fig7b", "fig8a", "fig8b"})
        CHECK(r.output.find(name) != std::string::npos);
}

TEST_CASE("sweep to a csv file via --out") {
    const std::string path = "/tmp/spincav_test_sweep.csv";
    const RunResult r = run("sweep -c " + kBaseline +
                            " --axis delta_m1:-11:-9:5 --format csv --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("# manifest:", 0) == 0);
    std::getline(in, line);
    CHECK(line == "axis1,axis2,E_N,eta_minus,stable,error_code");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 5);
}

TEST_CASE("sweep preset fig8a: csv with the temperature axis in mK") {
    const std::string path = "/tmp/spincav_test_fig8a.csv";
    const RunResult r = run("sweep -c " + kBaseline +
                            " --preset fig8a --format csv --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in);
    std::string line;
    std::getline(in, line);  // manifest comment
    std::getline(in, line);
    REQUIRE(line == "axis1,axis2,E_N,eta_minus,stable,error_code");
    std::getline(in, line);
    CHECK(line.rfind("0,,", 0) == 0);  // first temperature point, 1D axis
    std::string last;
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    CHECK(last.rfind("200,,", 0) == 0);  // last point at 200 mK
}

TEST_CASE("steady-state with a drive flag") {
    const RunResult r = run("steady-state -c " + kBaseline + " --epsilon0 80");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["mode"] == "shift");
    CHECK(j["solutions"][0]["photon_number"].get<double>() > 0.0);
}

TEST_CASE("json output round-trips byte-identically") {
    const RunResult r = run("entangle -c " + kBaseline);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j.dump(2) + "\n" == r.output);
}

TEST_CASE("version flag") {
    const RunResult r = run("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.1") != std::string::npos);
}
