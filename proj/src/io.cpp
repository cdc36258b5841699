#include "spincav/io.hpp"

#include <charconv>
#include <ctime>
#include <sstream>

#include "spincav/constants.hpp"
#include "spincav/errors.hpp"
#include "spincav/version.hpp"

namespace spincav {

namespace {

using nlohmann::json;
using constants::rad_per_MHz;

json complex_json(const std::complex<double>& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json params_rad_s_json(const SystemParams& p) {
    json j;
    j["omega_a"] = p.omega_a;
    j["delta_a"] = p.delta_a;
    j["delta_m"] = p.delta_m;
    j["kappa_a"] = p.kappa_a;
    j["kappa_m"] = p.kappa_m;
    j["g"] = p.g;
    if (const auto* shift = std::get_if<KerrShift>(&p.kerr)) {
        j["kerr"] = json{{"shift", shift->shift}};
    } else {
        const auto& c = std::get<KerrCoefficient>(p.kerr);
        j["kerr"] = json{{"coefficient", c.coefficient}, {"drive_power_W", c.drive_power}};
    }
    j["delta_F"] = resolve_sagnac_shift(p);
    j["temperature_K"] = p.temperature;
    j["drive_phase_rad"] = p.drive_phase;
    return j;
}

}  // namespace

json manifest_json(const std::string& subcommand, const ConfigDoc& doc,
                   std::uint64_t config_hash) {
    json j;
    j["subcommand"] = subcommand;
    j["tool_version"] = SPINCAV_VERSION;
    j["git_hash"] = SPINCAV_GIT_HASH;
    {
        const std::time_t now = std::time(nullptr);
        char stamp[32];
        std::strftime(stamp, sizeof(stamp), "%FT%TZ", std::gmtime(&now));
        j["timestamp"] = stamp;
    }
    std::ostringstream hash;
    hash << std::hex << config_hash;
    j["config_fnv1a"] = hash.str();
    j["entered"] = json::parse(serialize_config(doc));
    j["converted_rad_s"] = params_rad_s_json(to_params(doc));
    return j;
}

json steady_state_json(const std::vector<SteadyState>& solutions,
                       const std::string& mode, double epsilon0) {
    json j;
    j["mode"] = mode;
    j["epsilon0_MHz"] = epsilon0 / rad_per_MHz;
    j["n_solutions"] = solutions.size();
    json list = json::array();
    for (const auto& s : solutions) {
        json e;
        e["a_s"] = complex_json(s.a_s);
        e["m_s"] = json::array({complex_json(s.m_s[0]), complex_json(s.m_s[1])});
        e["delta_K_MHz"] =
            json::array({s.delta_K[0] / rad_per_MHz, s.delta_K[1] / rad_per_MHz});
        e["photon_number"] = s.photon_number;
        e["magnon_numbers"] = s.magnon_numbers;
        e["residual"] = s.residual;
        list.push_back(e);
    }
    j["solutions"] = list;
    return j;
}

json stability_json(const StabilityReport& report, const std::array<double, 2>& delta_K) {
    json j;
    json evs = json::array();
    for (const auto& ev : report.eigenvalues)
        evs.push_back(json{{"re_MHz", ev.real() / rad_per_MHz},
                           {"im_MHz", ev.imag() / rad_per_MHz}});
    j["eigenvalues_MHz"] = evs;
    j["stable"] = report.stable;
    j["max_real_part_MHz"] = report.max_real_part / rad_per_MHz;
    j["margin_MHz"] = report.margin / rad_per_MHz;
    j["delta_K_MHz"] =
        json::array({delta_K[0] / rad_per_MHz, delta_K[1] / rad_per_MHz});
    return j;
}

json entangle_json(const EntanglementResult& result) {
    json j;
    j["pair"] = mode_pair_name(result.mode_a, result.mode_b);
    j["stable"] = result.stable;
    j["eta_minus"] = result.eta_minus ? json(*result.eta_minus) : json(nullptr);
    j["log_negativity"] =
        result.log_negativity ? json(*result.log_negativity) : json(nullptr);
    j["delta_K_MHz"] = json::array(
        {result.delta_K[0] / rad_per_MHz, result.delta_K[1] / rad_per_MHz});
    json diag;
    diag["max_real_part_MHz"] = result.max_real_part / rad_per_MHz;
    diag["stability_margin_MHz"] = result.stability_margin / rad_per_MHz;
    diag["lyapunov_residual"] =
        result.lyapunov_residual ? json(*result.lyapunov_residual) : json(nullptr);
    diag["physicality_min_eig"] =
        result.physicality_min_eig ? json(*result.physicality_min_eig) : json(nullptr);
    j["diagnostics"] = diag;
    return j;
}

json resonance_json(const std::vector<ResonanceBranch>& branches,
                    const SystemParams& params, double delta_F,
                    const std::array<double, 2>& delta_K) {
    json j;
    j["delta_a_MHz"] = params.delta_a / rad_per_MHz;
    j["delta_F_MHz"] = delta_F / rad_per_MHz;
    j["delta_K_MHz"] =
        json::array({delta_K[0] / rad_per_MHz, delta_K[1] / rad_per_MHz});
    json list = json::array();
    for (const auto& b : branches) {
        json e;
        e["sign"] = std::string(b.sign[0] > 0 ? "+-" : "-+");
        e["delta_m_MHz"] =
            json::array({b.delta_m[0] / rad_per_MHz, b.delta_m[1] / rad_per_MHz});
        e["residual_rel"] = b.residual;
        SystemParams at_root = params;
        at_root.delta_m = b.delta_m;
        const SqueezingFrame frame = squeezing_frame(at_root, delta_K);
        e["squeezing_r"] = frame.r;
        e["effective_detuning_MHz"] = json::array(
            {frame.effective_detuning[0] / rad_per_MHz,
             frame.effective_detuning[1] / rad_per_MHz});
        e["effective_coupling_MHz"] = json::array(
            {frame.effective_coupling[0] / rad_per_MHz,
             frame.effective_coupling[1] / rad_per_MHz});
        list.push_back(e);
    }
    j["branches"] = list;
    return j;
}

std::string format_double(double value) {
    char buffer[32];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, end);
}

std::string sweep_csv_data(const SweepResult& result) {
    std::string out = "axis1,axis2,E_N,eta_minus,stable,error_code\n";
    const bool two_axes = result.grids.size() == 2;
    const std::size_t n2 = two_axes ? result.grids[1].size() : 1;
    for (std::size_t p = 0; p < result.points.size(); ++p) {
        const SweepPoint& point = result.points[p];
        out += format_double(result.grids[0][p / n2]);
        out += ',';
        if (two_axes) out += format_double(result.grids[1][p % n2]);
        out += ',';
        if (point.log_negativity) out += format_double(*point.log_negativity);
        out += ',';
        if (point.eta_minus) out += format_double(*point.eta_minus);
        out += ',';
        out += point.stable ? '1' : '0';
        out += ',';
        out += point.error_code;
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const SweepResult& result, const json& manifest) {
    return "# manifest: " + manifest.dump() + "\n" + sweep_csv_data(result);
}

json sweep_data_json(const SweepResult& result) {
    json j;
    json axes = json::array();
    for (std::size_t k = 0; k < result.axes.size(); ++k) {
        json a;
        a["parameter"] = sweep_parameter_name(result.axes[k].parameter);
        a["unit"] =
            result.axes[k].parameter == SweepParameter::Temperature ? "mK" : "MHz";
        a["values"] = result.grids[k];
        axes.push_back(a);
    }
    j["axes"] = axes;
    j["pair"] = mode_pair_name(result.pair_a, result.pair_b);
    json en = json::array(), eta = json::array(), stable = json::array(),
         code = json::array();
    for (const auto& point : result.points) {
        en.push_back(point.log_negativity ? json(*point.log_negativity) : json(nullptr));
        eta.push_back(point.eta_minus ? json(*point.eta_minus) : json(nullptr));
        stable.push_back(point.stable);
        code.push_back(point.error_code);
    }
    j["E_N"] = en;
    j["eta_minus"] = eta;
    j["stable"] = stable;
    j["error_code"] = code;
    j["ordering"] = "row-major over axes";
    return j;
}

json sweep_json(const SweepResult& result, const json& manifest) {
    json j;
    j["manifest"] = manifest;
    if (result.preset) j["preset"] = *result.preset;
    j["data"] = sweep_data_json(result);
    return j;
}

json nonreciprocity_json(const NonreciprocityMap& map, const json& manifest) {
    json j;
    j["manifest"] = manifest;
    j["plus"] = sweep_data_json(map.plus);
    j["minus"] = sweep_data_json(map.minus);
    json diff = json::array();
    for (const auto& d : map.difference)
        diff.push_back(d ? json(*d) : json(nullptr));
    j["difference"] = diff;
    return j;
}

json presets_json() {
    json list = json::array();
    for (const auto& preset : presets()) {
        json p;
        p["name"] = preset.name;
        p["description"] = preset.description;
        json axes = json::array();
        for (const auto& axis : preset.axes)
            axes.push_back(json{{"parameter", sweep_parameter_name(axis.parameter)},
                                {"min", axis.min_value},
                                {"max", axis.max_value},
                                {"points", axis.points}});
        p["axes"] = axes;
        if (preset.kerr_shift_MHz) p["kerr_shift_MHz"] = *preset.kerr_shift_MHz;
        if (preset.sagnac_shift_MHz) p["sagnac_shift_MHz"] = *preset.sagnac_shift_MHz;
        if (preset.delta_m_MHz) p["delta_m_MHz"] = *preset.delta_m_MHz;
        list.push_back(p);
    }
    return list;
}

std::string mode_pair_name(ModeIndex a, ModeIndex b) {
    const auto name = [](ModeIndex m) {
        switch (m) {
            case ModeIndex::Cavity: return "a";
            case ModeIndex::Magnon1: return "m1";
            case ModeIndex::Magnon2: return "m2";
        }
        return "?";
    };
    return std::string(name(a)) + name(b);
}

std::pair<ModeIndex, ModeIndex> parse_mode_pair(const std::string& name) {
    if (name == "m1m2" || name == "m2m1")
        return {ModeIndex::Magnon1, ModeIndex::Magnon2};
    if (name == "am1" || name == "m1a") return {ModeIndex::Cavity, ModeIndex::Magnon1};
    if (name == "am2" || name == "m2a") return {ModeIndex::Cavity, ModeIndex::Magnon2};
    throw ConfigError("unknown mode pair: " + name + " (expected m1m2, am1 or am2)");
}

}  // namespace spincav
