// Command-line front end. Talks to the simulator exclusively through the
// C API of the shared library.
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spincav.h"

namespace {

struct StringGuard {
    char* text = nullptr;
    ~StringGuard() { spincav_string_free(text); }
};

struct ParamsGuard {
    spincav_params* handle = nullptr;
    ~ParamsGuard() { spincav_params_free(handle); }
};

std::string num(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

int emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 1;
    }
    out << payload;
    return 0;
}

int fail(spincav_status status) {
    std::cout << "{\"error\": {\"status\": \"" << spincav_status_name(status)
              << "\", \"message\": " << std::quoted(spincav_last_error()) << "}}\n";
    return 1;
}

std::string preset_help() {
    std::string help = "Sweep presets (figure panels):\n";
    StringGuard text;
    if (spincav_presets(&text.text) != SPINCAV_OK) return help;
    // the preset list is JSON; format a plain table for --help
    std::istringstream in(text.text);
    std::string line, name, description;
    while (std::getline(in, line)) {
        const auto grab = [&](const char* key) -> std::optional<std::string> {
            const std::string tag = std::string("\"") + key + "\": \"";
            const auto pos = line.find(tag);
            if (pos == std::string::npos) return std::nullopt;
            const auto start = pos + tag.size();
            const auto end = line.find('"', start);
            return line.substr(start, end - start);
        };
        if (auto v = grab("name")) name = *v;
        if (auto v = grab("description")) description = *v;
        if (!name.empty() && !description.empty()) {
            help += "  " + name + std::string(name.size() < 6 ? 6 - name.size() : 1, ' ') +
                    description + "\n";
            name.clear();
            description.clear();
        }
    }
    return help;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state entanglement simulator for a spinning cavity "
                 "coupled to two Kerr magnon modes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(spincav_version()); });

    std::string config_path, out_path;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-c,--config", config_path, "config file (JSON)")
            ->required();
        cmd->add_option("-o,--out", out_path, "write output to a file instead of stdout");
    };

    auto* steady = app.add_subcommand("steady-state", "mean-field amplitudes and occupations");
    add_common(steady);
    bool self_consistent = false;
    bool rotate_m1 = false;
    std::optional<double> epsilon0_MHz, power_mW;
    std::optional<int> n_starts;
    steady->add_flag("--self-consistent", self_consistent,
                     "resolve Kerr shifts from coefficients and drive");
    steady->add_option("--epsilon0", epsilon0_MHz, "drive Rabi frequency over 2pi, MHz");
    steady->add_option("--power", power_mW, "drive power, mW");
    steady->add_option("--n-starts", n_starts, "self-consistent multistart count");
    steady->add_flag("--rotate-m1-real", rotate_m1,
                     "report amplitudes in the phase frame where m_1s is real");

    auto* stability = app.add_subcommand("stability", "drift-matrix eigenvalues and verdict");
    add_common(stability);

    auto* entangle = app.add_subcommand("entangle", "logarithmic negativity at one point");
    add_common(entangle);
    std::string pair = "m1m2";
    entangle->add_option("--pair", pair, "mode pair: m1m2, am1 or am2")
        ->default_val("m1m2");

    auto* resonance = app.add_subcommand("resonance", "optimal-detuning branch pairs");
    add_common(resonance);

    auto* sweep = app.add_subcommand("sweep", "1D/2D parameter sweeps of E_N");
    add_common(sweep);
    std::string preset, sweep_pair = "m1m2", format = "json", flip;
    std::vector<std::string> axes;
    int workers = 0;
    sweep->add_option("--preset", preset, "figure-panel preset name");
    sweep->add_option("--axis", axes,
                      "axis as parameter:min:max:points (MHz; temperature in mK); "
                      "repeat for 2D")
        ->expected(0, 2);
    sweep->add_option("--pair", sweep_pair, "mode pair")->default_val("m1m2");
    sweep->add_option("--format", format, "output format: json or csv")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--flip", flip, "paired +/- sweep: sagnac or kerr")
        ->check(CLI::IsMember({"sagnac", "kerr"}));
    sweep->add_option("--workers", workers, "cap on worker threads "
                                            "(default: SPINCAV_MAX_WORKERS or hardware)");
    sweep->footer(preset_help());

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    ParamsGuard params;
    if (const auto status = spincav_params_load(config_path.c_str(), &params.handle);
        status != SPINCAV_OK)
        return fail(status);

    StringGuard result;
    spincav_status status = SPINCAV_OK;

    if (steady->parsed()) {
        std::string options = "{";
        if (self_consistent) options += "\"mode\": \"self-consistent\", ";
        if (epsilon0_MHz) options += "\"epsilon0_MHz\": " + num(*epsilon0_MHz) + ", ";
        if (power_mW) options += "\"power_mW\": " + num(*power_mW) + ", ";
        if (n_starts) options += "\"n_starts\": " + std::to_string(*n_starts) + ", ";
        options += std::string("\"rotate_m1_real\": ") + (rotate_m1 ? "true" : "false") + "}";
        status = spincav_steady_state(params.handle, options.c_str(), &result.text);
    } else if (stability->parsed()) {
        status = spincav_stability(params.handle, &result.text);
    } else if (entangle->parsed()) {
        status = spincav_entangle(params.handle, pair.c_str(), &result.text);
    } else if (resonance->parsed()) {
        status = spincav_resonance(params.handle, &result.text);
    } else if (sweep->parsed()) {
        std::string spec = "{";
        if (!preset.empty()) spec += "\"preset\": \"" + preset + "\", ";
        if (!axes.empty()) {
            spec += "\"axes\": [";
            for (std::size_t i = 0; i < axes.size(); ++i) {
                std::string a = axes[i];
                for (auto& c : a)
                    if (c == ':') c = ' ';
                std::istringstream in(a);
                std::string parameter;
                double lo, hi;
                int points;
                if (!(in >> parameter >> lo >> hi >> points)) {
                    std::cerr << "bad --axis, expected parameter:min:max:points: "
                              << axes[i] << "\n";
                    return 2;
                }
                spec += std::string(i ? ", " : "") + "{\"parameter\": \"" + parameter +
                        "\", \"min\": " + num(lo) + ", \"max\": " + num(hi) +
                        ", \"points\": " + std::to_string(points) + "}";
            }
            spec += "], ";
        }
        if (!flip.empty()) spec += "\"flip\": \"" + flip + "\", ";
        if (workers > 0) spec += "\"max_workers\": " + std::to_string(workers) + ", ";
        spec += "\"pair\": \"" + sweep_pair + "\", \"format\": \"" + format + "\"}";
        status = spincav_sweep(params.handle, spec.c_str(), &result.text);
    }

    if (status != SPINCAV_OK) return fail(status);
    return emit(result.text ? result.text : "", out_path);
}
