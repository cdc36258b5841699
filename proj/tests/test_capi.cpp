#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "spincav.h"

using nlohmann::json;

namespace {

const std::string kBaseline = std::string(SPINCAV_CONFIG_DIR) + "/baseline.json";

struct Handle {
    spincav_params* p = nullptr;
    ~Handle() { spincav_params_free(p); }
};

struct Out {
    char* s = nullptr;
    ~Out() { spincav_string_free(s); }
    json parsed() const { return json::parse(s); }
};

Handle load_baseline() {
    Handle h;
    REQUIRE(spincav_params_load(kBaseline.c_str(), &h.p) == SPINCAV_OK);
    return h;
}

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::strlen(spincav_version()) > 0);
    CHECK(std::string(spincav_status_name(SPINCAV_OK)) == "ok");
    CHECK(std::string(spincav_status_name(SPINCAV_ERR_UNSTABLE)) == "unstable");
}

TEST_CASE("loading: missing file is an IO error with a message") {
    spincav_params* p = nullptr;
    CHECK(spincav_params_load("/nonexistent.json", &p) == SPINCAV_ERR_IO);
    CHECK(std::strlen(spincav_last_error()) > 0);
    CHECK(p == nullptr);
}

TEST_CASE("loading: malformed config is a config error") {
    spincav_params* p = nullptr;
    CHECK(spincav_params_from_json("{\"nope\": 1}", &p) == SPINCAV_ERR_CONFIG);
    CHECK(std::string(spincav_last_error()).find("nope") != std::string::npos);
}

TEST_CASE("null arguments are rejected") {
    CHECK(spincav_params_load(nullptr, nullptr) == SPINCAV_ERR_INVALID_ARG);
    CHECK(spincav_entangle(nullptr, "m1m2", nullptr) == SPINCAV_ERR_INVALID_ARG);
}

TEST_CASE("params round-trip through JSON text") {
    Handle h = load_baseline();
    Out text;
    REQUIRE(spincav_params_to_json(h.p, &text.s) == SPINCAV_OK);
    spincav_params* again = nullptr;
    REQUIRE(spincav_params_from_json(text.s, &again) == SPINCAV_OK);
    Out text2;
    REQUIRE(spincav_params_to_json(again, &text2.s) == SPINCAV_OK);
    CHECK(std::string(text.s) == text2.s);
    spincav_params_free(again);
}

TEST_CASE("entangle: baseline point with manifest") {
    Handle h = load_baseline();
    Out out;
    REQUIRE(spincav_entangle(h.p, nullptr, &out.s) == SPINCAV_OK);
    const json j = out.parsed();
    CHECK(j["pair"] == "m1m2");
    CHECK(j["stable"] == true);
    CHECK(j["log_negativity"].get<double>() >= 0.0);
    CHECK(j["eta_minus"].get<double>() > 0.0);
    CHECK(j["manifest"]["subcommand"] == "entangle");
    CHECK(j["manifest"]["entered"]["kappa_a_MHz"] == 1.0);
    CHECK(j["manifest"]["converted_rad_s"]["kappa_a"].get<double>() ==
          doctest::Approx(6.283185307179586e6));
    // emitted JSON re-parses and re-dumps identically
    CHECK(json::parse(j.dump(2) + "\n").dump(2) + "\n" == std::string(out.s));
}

TEST_CASE("entangle: instability reported in the payload, not as an error") {
    Handle h;
    json config = json::parse(std::ifstream(kBaseline), nullptr, true);
    config["kerr"]["shift_MHz"] = {3.0, 3.0};
    config["delta_m_MHz"] = {-3.0, 3.0};
    REQUIRE(spincav_params_from_json(config.dump().c_str(), &h.p) == SPINCAV_OK);
    Out out;
    REQUIRE(spincav_entangle(h.p, "m1m2", &out.s) == SPINCAV_OK);
    const json j = out.parsed();
    CHECK(j["stable"] == false);
    CHECK(j["log_negativity"].is_null());
    CHECK(j["eta_minus"].is_null());
}

TEST_CASE("entangle: bad pair name") {
    Handle h = load_baseline();
    Out out;
    CHECK(spincav_entangle(h.p, "m1m3", &out.s) == SPINCAV_ERR_CONFIG);
}

TEST_CASE("stability: eigenvalues and verdict") {
    Handle h = load_baseline();
    Out out;
    REQUIRE(spincav_stability(h.p, &out.s) == SPINCAV_OK);
    const json j = out.parsed();
    CHECK(j["stable"] == true);
    CHECK(j["eigenvalues_MHz"].size() == 6);
    CHECK(j["max_real_part_MHz"].get<double>() < 0.0);
    CHECK(j["delta_K_MHz"][0] == 1.0);
}

TEST_CASE("resonance: two branch pairs at the baseline") {
    Handle h = load_baseline();
    Out out;
    REQUIRE(spincav_resonance(h.p, &out.s) == SPINCAV_OK);
    const json j = out.parsed();
    REQUIRE(j["branches"].size() == 2);
    CHECK(j["branches"][0]["delta_m_MHz"][0].get<double>() ==
          doctest::Approx(7.06).epsilon(0.003));
    CHECK(j["branches"][0]["delta_m_MHz"][1].get<double>() ==
          doctest::Approx(-11.06).epsilon(0.002));
    CHECK(j["branches"][1]["delta_m_MHz"][0].get<double>() ==
          doctest::Approx(-11.06).epsilon(0.002));
}

TEST_CASE("steady state: shift mode needs a drive") {
    Handle h = load_baseline();
    Out out;
    CHECK(spincav_steady_state(h.p, nullptr, &out.s) == SPINCAV_ERR_CONFIG);
    REQUIRE(spincav_steady_state(h.p, "{\"epsilon0_MHz\": 80.0}", &out.s) ==
            SPINCAV_OK);
    const json j = out.parsed();
    CHECK(j["mode"] == "shift");
    REQUIRE(j["solutions"].size() == 1);
    CHECK(j["solutions"][0]["photon_number"].get<double>() > 0.0);
    CHECK(j["solutions"][0]["residual"].get<double>() < 1e-10);
    CHECK(j["solutions"][0]["delta_K_MHz"][0] == 1.0);
}

TEST_CASE("steady state: self-consistent mode from coefficients") {
    json config = json::parse(std::ifstream(kBaseline), nullptr, true);
    config["kerr"] = {{"coefficient_nHz", {1e12, 1e12}},  // 2pi x 1e3 rad/s
                      {"drive_power_mW", 0.0}};
    Handle h;
    REQUIRE(spincav_params_from_json(config.dump().c_str(), &h.p) == SPINCAV_OK);
    Out out;
    REQUIRE(spincav_steady_state(h.p, "{\"epsilon0_MHz\": 40.0, \"n_starts\": 9}",
                                 &out.s) == SPINCAV_OK);
    const json j = out.parsed();
    CHECK(j["mode"] == "self-consistent");
    CHECK(j["solutions"].size() >= 1);
    // requesting shift mode against a coefficient config is a config error
    Out out2;
    CHECK(spincav_steady_state(h.p, "{\"mode\": \"shift\", \"epsilon0_MHz\": 1.0}",
                               &out2.s) == SPINCAV_ERR_CONFIG);
}

TEST_CASE("steady state: kerr drive power is the default drive") {
    json config = json::parse(std::ifstream(kBaseline), nullptr, true);
    // power giving a 40 MHz Rabi frequency for kappa_a/2pi = 1 MHz,
    // omega_L/2pi = 9.99 GHz under the sqrt(2 kappa P / omega_L) convention
    const double eps0 = 40 * 2e6 * M_PI;
    const double omega_L = 2e9 * M_PI * (10.0 - 0.01);
    const double power_W = eps0 * eps0 * omega_L / (2.0 * 2e6 * M_PI);
    config["kerr"] = {{"coefficient_nHz", {1e3, 1e3}},
                      {"drive_power_mW", power_W * 1e3}};
    Handle h;
    REQUIRE(spincav_params_from_json(config.dump().c_str(), &h.p) == SPINCAV_OK);
    Out out;
    REQUIRE(spincav_steady_state(h.p, nullptr, &out.s) == SPINCAV_OK);
    const json j = out.parsed();
    CHECK(j["mode"] == "self-consistent");
    CHECK(j["epsilon0_MHz"].get<double>() == doctest::Approx(40.0).epsilon(1e-9));
    // entangle and stability resolve the same config without an explicit drive
    Out out2;
    REQUIRE(spincav_entangle(h.p, "m1m2", &out2.s) == SPINCAV_OK);
    Out out3;
    REQUIRE(spincav_stability(h.p, &out3.s) == SPINCAV_OK);
}

TEST_CASE("sweep: csv output with exact header and manifest comment") {
    Handle h = load_baseline();
    Out out;
    const char* spec = R"({"axes": [{"parameter": "delta_m1", "min": -11, "max": -9,
                           "points": 5}], "format": "csv"})";
    REQUIRE(spincav_sweep(h.p, spec, &out.s) == SPINCAV_OK);
    const std::string text = out.s;
    CHECK(text.rfind("# manifest: {", 0) == 0);
    const auto header_at = text.find('\n') + 1;
    CHECK(text.substr(header_at, text.find('\n', header_at) - header_at) ==
          "axis1,axis2,E_N,eta_minus,stable,error_code");
    // five data rows
    int rows = 0;
    for (std::size_t k = header_at; k < text.size(); ++k)
        if (text[k] == '\n') ++rows;
    CHECK(rows == 6);  // header + 5 points
}

TEST_CASE("sweep: json output carries nulls at unstable points") {
    json config = json::parse(std::ifstream(kBaseline), nullptr, true);
    config["kerr"]["shift_MHz"] = {3.0, 3.0};
    Handle h;
    REQUIRE(spincav_params_from_json(config.dump().c_str(), &h.p) == SPINCAV_OK);
    Out out;
    const char* spec = R"({"axes": [{"parameter": "delta_m1", "min": -5, "max": -3,
                           "points": 3}, {"parameter": "delta_m2", "min": 3, "max": 5,
                           "points": 3}]})";
    REQUIRE(spincav_sweep(h.p, spec, &out.s) == SPINCAV_OK);
    const json j = out.parsed();
    const auto& stable = j["data"]["stable"];
    const auto& en = j["data"]["E_N"];
    bool found_null = false;
    for (std::size_t k = 0; k < stable.size(); ++k) {
        if (!stable[k].get<bool>()) {
            CHECK(en[k].is_null());
            CHECK(j["data"]["error_code"][k] == "unstable");
            found_null = true;
        }
    }
    CHECK(found_null);
}

TEST_CASE("sweep: flip request returns plus/minus/difference") {
    Handle h = load_baseline();
    Out out;
    const char* spec = R"({"axes": [{"parameter": "delta_m1", "min": -10.5,
                           "max": -9.5, "points": 3}], "flip": "sagnac"})";
    REQUIRE(spincav_sweep(h.p, spec, &out.s) == SPINCAV_OK);
    const json j = out.parsed();
    CHECK(j.contains("plus"));
    CHECK(j.contains("minus"));
    CHECK(j["difference"].size() == 3);
    // csv format is rejected for flipped sweeps
    Out out2;
    const char* bad = R"({"axes": [{"parameter": "delta_m1", "min": -10.5,
                          "max": -9.5, "points": 3}], "flip": "sagnac",
                          "format": "csv"})";
    CHECK(spincav_sweep(h.p, bad, &out2.s) == SPINCAV_ERR_CONFIG);
}

TEST_CASE("sweep: unknown preset is a config error") {
    Handle h = load_baseline();
    Out out;
    CHECK(spincav_sweep(h.p, "{\"preset\": \"fig0x\"}", &out.s) ==
          SPINCAV_ERR_CONFIG);
}

TEST_CASE("presets list") {
    Out out;
    REQUIRE(spincav_presets(&out.s) == SPINCAV_OK);
    const json j = out.parsed();
    CHECK(j.size() == 28);
    bool has_fig1a = false, has_fig8b = false;
    for (const auto& p : j) {
        if (p["name"] == "fig1a") has_fig1a = true;
        if (p["name"] == "fig8b") has_fig8b = true;
    }
    CHECK(has_fig1a);
    CHECK(has_fig8b);
}

TEST_CASE("resonance propagates a degenerate-detuning domain error") {
    json config = json::parse(std::ifstream(kBaseline), nullptr, true);
    config["delta_a_MHz"] = 1.0;  // delta_a - delta_F = 0
    Handle h;
    REQUIRE(spincav_params_from_json(config.dump().c_str(), &h.p) == SPINCAV_OK);
    Out out;
    CHECK(spincav_resonance(h.p, &out.s) == SPINCAV_ERR_DOMAIN);
}
