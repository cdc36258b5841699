#include "spincav.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"
#include "spincav/config.hpp"
#include "spincav/constants.hpp"
#include "spincav/entanglement.hpp"
#include "spincav/errors.hpp"
#include "spincav/io.hpp"
#include "spincav/squeezing.hpp"
#include "spincav/steady_state.hpp"
#include "spincav/sweep.hpp"
#include "spincav/version.hpp"

using nlohmann::json;

struct spincav_params {
    spincav::ConfigDoc doc;
    spincav::SystemParams params;
    std::uint64_t hash;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

spincav_status status_of(const std::exception& e) {
    using namespace spincav;
    if (dynamic_cast<const IoError*>(&e)) return SPINCAV_ERR_IO;
    if (dynamic_cast<const ConfigError*>(&e)) return SPINCAV_ERR_CONFIG;
    if (dynamic_cast<const nlohmann::json::exception*>(&e)) return SPINCAV_ERR_CONFIG;
    if (dynamic_cast<const InvalidParamsError*>(&e)) return SPINCAV_ERR_CONFIG;
    if (dynamic_cast<const DomainError*>(&e)) return SPINCAV_ERR_DOMAIN;
    if (dynamic_cast<const SingularSystemError*>(&e)) return SPINCAV_ERR_SINGULAR;
    if (dynamic_cast<const ConvergenceError*>(&e)) return SPINCAV_ERR_NO_CONVERGENCE;
    if (dynamic_cast<const UnstableSystemError*>(&e)) return SPINCAV_ERR_UNSTABLE;
    if (dynamic_cast<const NoRootError*>(&e)) return SPINCAV_ERR_NO_ROOT;
    return SPINCAV_ERR_NUMERIC;
}

template <typename Fn>
spincav_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SPINCAV_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (...) {
        g_last_error = "unknown error";
        return SPINCAV_ERR_NUMERIC;
    }
}

spincav_status invalid_arg(const char* message) {
    g_last_error = message;
    return SPINCAV_ERR_INVALID_ARG;
}

// explicit epsilon0/power beats the kerr drive power, which is the fallback
// in coefficient mode
double resolve_epsilon0(const spincav_params& h, const json& options) {
    using namespace spincav;
    if (options.contains("epsilon0_MHz") && options.contains("power_mW"))
        throw ConfigError("steady-state options: epsilon0_MHz and power_mW are exclusive");
    if (options.contains("epsilon0_MHz"))
        return options["epsilon0_MHz"].get<double>() * constants::rad_per_MHz;
    if (options.contains("power_mW"))
        return rabi_frequency(options["power_mW"].get<double>() * 1e-3, h.params.kappa_a,
                              drive_frequency(h.params));
    if (const auto* coeff = std::get_if<KerrCoefficient>(&h.params.kerr))
        return rabi_frequency(coeff->drive_power, h.params.kappa_a,
                              drive_frequency(h.params));
    throw ConfigError("steady-state requires epsilon0_MHz or power_mW");
}

spincav::SweepSpec parse_sweep_spec(const spincav_params& h, const json& spec) {
    using namespace spincav;
    SweepSpec s;
    s.base = h.doc;
    if (spec.contains("preset")) s.preset = spec["preset"].get<std::string>();
    if (spec.contains("axes")) {
        for (const auto& a : spec["axes"]) {
            SweepAxis axis;
            axis.parameter = sweep_parameter_from_name(a.at("parameter").get<std::string>());
            axis.min_value = a.at("min").get<double>();
            axis.max_value = a.at("max").get<double>();
            axis.points = a.at("points").get<int>();
            s.axes.push_back(axis);
        }
    }
    if (spec.contains("pair"))
        std::tie(s.pair_a, s.pair_b) = parse_mode_pair(spec["pair"].get<std::string>());
    return s;
}

}  // namespace

extern "C" {

const char* spincav_version(void) { return SPINCAV_VERSION; }

const char* spincav_status_name(spincav_status status) {
    switch (status) {
        case SPINCAV_OK: return "ok";
        case SPINCAV_ERR_INVALID_ARG: return "invalid_arg";
        case SPINCAV_ERR_IO: return "io_error";
        case SPINCAV_ERR_CONFIG: return "config_error";
        case SPINCAV_ERR_DOMAIN: return "domain_error";
        case SPINCAV_ERR_SINGULAR: return "singular_system";
        case SPINCAV_ERR_NO_CONVERGENCE: return "no_convergence";
        case SPINCAV_ERR_UNSTABLE: return "unstable";
        case SPINCAV_ERR_NO_ROOT: return "no_root";
        case SPINCAV_ERR_NUMERIC: return "numeric_error";
    }
    return "unknown";
}

const char* spincav_last_error(void) { return g_last_error.c_str(); }

void spincav_string_free(char* text) { delete[] text; }

spincav_status spincav_params_load(const char* path, spincav_params** out) {
    if (!path || !out) return invalid_arg("spincav_params_load: null argument");
    return guarded([&] {
        std::ifstream in(path);
        if (!in) throw spincav::IoError(std::string("cannot open config file: ") + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        auto handle = std::make_unique<spincav_params>();
        handle->doc = spincav::parse_config(text);
        handle->params = spincav::to_params(handle->doc);
        handle->hash = spincav::fnv1a(text);
        *out = handle.release();
    });
}

spincav_status spincav_params_from_json(const char* json_text, spincav_params** out) {
    if (!json_text || !out)
        return invalid_arg("spincav_params_from_json: null argument");
    return guarded([&] {
        auto handle = std::make_unique<spincav_params>();
        handle->doc = spincav::parse_config(json_text);
        handle->params = spincav::to_params(handle->doc);
        handle->hash = spincav::fnv1a(json_text);
        *out = handle.release();
    });
}

spincav_status spincav_params_to_json(const spincav_params* params, char** json_out) {
    if (!params || !json_out)
        return invalid_arg("spincav_params_to_json: null argument");
    return guarded([&] { *json_out = copy_string(spincav::serialize_config(params->doc)); });
}

void spincav_params_free(spincav_params* params) { delete params; }

spincav_status spincav_steady_state(const spincav_params* params,
                                    const char* options_json, char** json_out) {
    if (!params || !json_out)
        return invalid_arg("spincav_steady_state: null argument");
    return guarded([&] {
        using namespace spincav;
        const json options = options_json ? json::parse(options_json) : json::object();
        const double epsilon0 = resolve_epsilon0(*params, options);

        const bool coefficient_mode =
            std::holds_alternative<KerrCoefficient>(params->params.kerr);
        std::string mode = coefficient_mode ? "self-consistent" : "shift";
        if (options.contains("mode")) mode = options["mode"].get<std::string>();
        if (mode != "shift" && mode != "self-consistent")
            throw ConfigError("steady-state options: mode must be shift or self-consistent");
        if ((mode == "shift") == coefficient_mode)
            throw ConfigError(coefficient_mode
                                  ? "shift mode requires the kerr shift variant"
                                  : "self-consistent mode requires the kerr "
                                    "coefficient variant");

        std::vector<SteadyState> solutions;
        if (mode == "shift") {
            solutions.push_back(solve_steady_state_shift_mode(params->params, epsilon0));
        } else {
            SteadyStateOptions opts;
            if (options.contains("n_starts")) opts.n_starts = options["n_starts"].get<int>();
            solutions = solve_steady_state_selfconsistent(params->params, epsilon0, opts);
        }
        if (options.value("rotate_m1_real", false))
            for (auto& s : solutions) s = rotated_to_real_m1(s);

        json j = steady_state_json(solutions, mode, epsilon0);
        j["manifest"] = manifest_json("steady-state", params->doc, params->hash);
        *json_out = copy_string(j.dump(2) + "\n");
    });
}

spincav_status spincav_stability(const spincav_params* params, char** json_out) {
    if (!params || !json_out) return invalid_arg("spincav_stability: null argument");
    return guarded([&] {
        using namespace spincav;
        const auto delta_K = resolve_kerr_shift(params->params);
        const StabilityReport report =
            is_stable(drift_matrix(params->params, delta_K));
        json j = stability_json(report, delta_K);
        j["manifest"] = manifest_json("stability", params->doc, params->hash);
        *json_out = copy_string(j.dump(2) + "\n");
    });
}

spincav_status spincav_entangle(const spincav_params* params, const char* pair,
                                char** json_out) {
    if (!params || !json_out) return invalid_arg("spincav_entangle: null argument");
    return guarded([&] {
        using namespace spincav;
        auto [mu, nu] = parse_mode_pair(pair ? pair : "m1m2");
        json j = entangle_json(entanglement_of(params->params, mu, nu));
        j["manifest"] = manifest_json("entangle", params->doc, params->hash);
        *json_out = copy_string(j.dump(2) + "\n");
    });
}

spincav_status spincav_resonance(const spincav_params* params, char** json_out) {
    if (!params || !json_out) return invalid_arg("spincav_resonance: null argument");
    return guarded([&] {
        using namespace spincav;
        const auto delta_K = resolve_kerr_shift(params->params);
        const double delta_F = resolve_sagnac_shift(params->params);
        const auto branches =
            optimal_detunings(params->params.delta_a, delta_F, delta_K);
        json j = resonance_json(branches, params->params, delta_F, delta_K);
        j["manifest"] = manifest_json("resonance", params->doc, params->hash);
        *json_out = copy_string(j.dump(2) + "\n");
    });
}

spincav_status spincav_sweep(const spincav_params* params, const char* spec_json,
                             char** out) {
    if (!params || !spec_json || !out) return invalid_arg("spincav_sweep: null argument");
    return guarded([&] {
        using namespace spincav;
        const json spec = json::parse(spec_json);
        const SweepSpec s = parse_sweep_spec(*params, spec);
        const std::string format = spec.value("format", "json");
        if (format != "json" && format != "csv")
            throw ConfigError("sweep: format must be json or csv");
        const int max_workers = spec.value("max_workers", 0);
        const json manifest = manifest_json("sweep", params->doc, params->hash);

        if (spec.contains("flip")) {
            const std::string flip = spec["flip"].get<std::string>();
            if (flip != "sagnac" && flip != "kerr")
                throw ConfigError("sweep: flip must be sagnac or kerr");
            if (format == "csv")
                throw ConfigError("sweep: flipped sweeps support json output only");
            const NonreciprocityMap map = nonreciprocity_map(
                s, flip == "sagnac" ? FlipKind::Sagnac : FlipKind::Kerr, max_workers);
            *out = copy_string(nonreciprocity_json(map, manifest).dump(2) + "\n");
            return;
        }

        const SweepResult result = run_sweep(s, max_workers);
        if (format == "csv")
            *out = copy_string(sweep_csv(result, manifest));
        else
            *out = copy_string(sweep_json(result, manifest).dump(2) + "\n");
    });
}

spincav_status spincav_presets(char** json_out) {
    if (!json_out) return invalid_arg("spincav_presets: null argument");
    return guarded(
        [&] { *json_out = copy_string(spincav::presets_json().dump(2) + "\n"); });
}

}  // extern "C"
