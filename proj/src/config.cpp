#include "spincav/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "spincav/constants.hpp"
#include "spincav/errors.hpp"

namespace spincav {

namespace {

using nlohmann::json;

double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path + ": expected a number");
    return j.get<double>();
}

std::array<double, 2> pair_at(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(path + ": expected an array of two numbers");
    return {number_at(j[0], path + "[0]"), number_at(j[1], path + "[1]")};
}

void check_keys(const json& obj, const std::string& path,
                const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key))
            throw ConfigError("unknown key: " + (path.empty() ? key : path + "." + key));
    }
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ConfigError("missing key: " + (path.empty() ? key : path + "." + key));
    return *it;
}

}  // namespace

ConfigDoc parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");

    check_keys(root, "",
               {"omega_a_GHz", "omega_a_MHz", "delta_a_MHz", "delta_m_MHz", "kappa_a_MHz",
                "kappa_m_MHz", "g_MHz", "kerr", "sagnac", "temperature_mK",
                "drive_phase_rad"});

    ConfigDoc doc;
    const bool has_ghz = root.contains("omega_a_GHz");
    const bool has_mhz = root.contains("omega_a_MHz");
    if (has_ghz == has_mhz)
        throw ConfigError("exactly one of omega_a_GHz, omega_a_MHz is required");
    doc.omega_a_unit = has_ghz ? ConfigDoc::OmegaUnit::GHz : ConfigDoc::OmegaUnit::MHz;
    doc.omega_a = number_at(root[has_ghz ? "omega_a_GHz" : "omega_a_MHz"],
                            has_ghz ? "omega_a_GHz" : "omega_a_MHz");

    doc.delta_a_MHz = number_at(member(root, "delta_a_MHz", ""), "delta_a_MHz");
    doc.delta_m_MHz = pair_at(member(root, "delta_m_MHz", ""), "delta_m_MHz");
    doc.kappa_a_MHz = number_at(member(root, "kappa_a_MHz", ""), "kappa_a_MHz");
    doc.kappa_m_MHz = pair_at(member(root, "kappa_m_MHz", ""), "kappa_m_MHz");
    doc.g_MHz = pair_at(member(root, "g_MHz", ""), "g_MHz");
    doc.temperature_mK = number_at(member(root, "temperature_mK", ""), "temperature_mK");
    if (root.contains("drive_phase_rad"))
        doc.drive_phase_rad = number_at(root["drive_phase_rad"], "drive_phase_rad");

    const json& kerr = member(root, "kerr", "");
    if (!kerr.is_object()) throw ConfigError("kerr: expected an object");
    check_keys(kerr, "kerr", {"shift_MHz", "coefficient_nHz", "drive_power_mW"});
    const bool kerr_shift = kerr.contains("shift_MHz");
    const bool kerr_coeff = kerr.contains("coefficient_nHz");
    if (kerr_shift == kerr_coeff)
        throw ConfigError("kerr: exactly one of shift_MHz, coefficient_nHz is required");
    if (kerr_shift) {
        if (kerr.contains("drive_power_mW"))
            throw ConfigError("kerr.drive_power_mW: only valid with coefficient_nHz");
        doc.kerr_shift_MHz = pair_at(kerr["shift_MHz"], "kerr.shift_MHz");
    } else {
        doc.kerr_coefficient_nHz = pair_at(kerr["coefficient_nHz"], "kerr.coefficient_nHz");
        doc.kerr_drive_power_mW =
            number_at(member(kerr, "drive_power_mW", "kerr"), "kerr.drive_power_mW");
    }

    const json& sagnac = member(root, "sagnac", "");
    if (!sagnac.is_object()) throw ConfigError("sagnac: expected an object");
    check_keys(sagnac, "sagnac",
               {"shift_MHz", "spin_rate_kHz", "refractive_index", "radius_mm",
                "dn_dlambda_per_m", "drive_direction"});
    const bool sagnac_shift = sagnac.contains("shift_MHz");
    const bool sagnac_phys = sagnac.contains("spin_rate_kHz");
    if (sagnac_shift == sagnac_phys)
        throw ConfigError("sagnac: exactly one of shift_MHz, spin_rate_kHz is required");
    if (sagnac_shift) {
        for (const char* key :
             {"refractive_index", "radius_mm", "dn_dlambda_per_m", "drive_direction"})
            if (sagnac.contains(key))
                throw ConfigError(std::string("sagnac.") + key +
                                  ": only valid with spin_rate_kHz");
        doc.sagnac_shift_MHz = number_at(sagnac["shift_MHz"], "sagnac.shift_MHz");
    } else {
        doc.sagnac_spin_rate_kHz =
            number_at(sagnac["spin_rate_kHz"], "sagnac.spin_rate_kHz");
        doc.sagnac_refractive_index = number_at(
            member(sagnac, "refractive_index", "sagnac"), "sagnac.refractive_index");
        doc.sagnac_radius_mm =
            number_at(member(sagnac, "radius_mm", "sagnac"), "sagnac.radius_mm");
        if (sagnac.contains("dn_dlambda_per_m"))
            doc.sagnac_dn_dlambda_per_m =
                number_at(sagnac["dn_dlambda_per_m"], "sagnac.dn_dlambda_per_m");
        const json& dir = member(sagnac, "drive_direction", "sagnac");
        if (!dir.is_string() || (dir != "CW" && dir != "CCW"))
            throw ConfigError("sagnac.drive_direction: expected \"CW\" or \"CCW\"");
        doc.sagnac_direction =
            dir == "CW" ? DriveDirection::CW : DriveDirection::CCW;
    }
    return doc;
}

ConfigDoc load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const ConfigDoc& doc) {
    json root;
    root[doc.omega_a_unit == ConfigDoc::OmegaUnit::GHz ? "omega_a_GHz" : "omega_a_MHz"] =
        doc.omega_a;
    root["delta_a_MHz"] = doc.delta_a_MHz;
    root["delta_m_MHz"] = doc.delta_m_MHz;
    root["kappa_a_MHz"] = doc.kappa_a_MHz;
    root["kappa_m_MHz"] = doc.kappa_m_MHz;
    root["g_MHz"] = doc.g_MHz;
    json kerr;
    if (doc.kerr_shift_MHz) {
        kerr["shift_MHz"] = *doc.kerr_shift_MHz;
    } else {
        kerr["coefficient_nHz"] = *doc.kerr_coefficient_nHz;
        kerr["drive_power_mW"] = *doc.kerr_drive_power_mW;
    }
    root["kerr"] = kerr;
    json sagnac;
    if (doc.sagnac_shift_MHz) {
        sagnac["shift_MHz"] = *doc.sagnac_shift_MHz;
    } else {
        sagnac["spin_rate_kHz"] = *doc.sagnac_spin_rate_kHz;
        sagnac["refractive_index"] = *doc.sagnac_refractive_index;
        sagnac["radius_mm"] = *doc.sagnac_radius_mm;
        sagnac["dn_dlambda_per_m"] = doc.sagnac_dn_dlambda_per_m;
        sagnac["drive_direction"] =
            doc.sagnac_direction == DriveDirection::CW ? "CW" : "CCW";
    }
    root["sagnac"] = sagnac;
    root["temperature_mK"] = doc.temperature_mK;
    root["drive_phase_rad"] = doc.drive_phase_rad;
    return root.dump(2) + "\n";
}

SystemParams to_params(const ConfigDoc& doc) {
    using namespace constants;
    SystemParams p;
    p.omega_a = doc.omega_a *
                (doc.omega_a_unit == ConfigDoc::OmegaUnit::GHz ? rad_per_GHz : rad_per_MHz);
    p.delta_a = doc.delta_a_MHz * rad_per_MHz;
    p.delta_m = {doc.delta_m_MHz[0] * rad_per_MHz, doc.delta_m_MHz[1] * rad_per_MHz};
    p.kappa_a = doc.kappa_a_MHz * rad_per_MHz;
    p.kappa_m = {doc.kappa_m_MHz[0] * rad_per_MHz, doc.kappa_m_MHz[1] * rad_per_MHz};
    p.g = {doc.g_MHz[0] * rad_per_MHz, doc.g_MHz[1] * rad_per_MHz};
    if (doc.kerr_shift_MHz) {
        p.kerr = KerrShift{{(*doc.kerr_shift_MHz)[0] * rad_per_MHz,
                            (*doc.kerr_shift_MHz)[1] * rad_per_MHz}};
    } else {
        p.kerr = KerrCoefficient{{(*doc.kerr_coefficient_nHz)[0] * two_pi * 1e-9,
                                  (*doc.kerr_coefficient_nHz)[1] * two_pi * 1e-9},
                                 *doc.kerr_drive_power_mW * 1e-3};
    }
    if (doc.sagnac_shift_MHz) {
        p.sagnac = SagnacShift{*doc.sagnac_shift_MHz * rad_per_MHz};
    } else {
        p.sagnac = SagnacPhysical{*doc.sagnac_spin_rate_kHz * two_pi * 1e3,
                                  *doc.sagnac_refractive_index,
                                  *doc.sagnac_radius_mm * 1e-3,
                                  doc.sagnac_dn_dlambda_per_m, doc.sagnac_direction};
    }
    p.temperature = doc.temperature_mK * 1e-3;
    p.drive_phase = doc.drive_phase_rad;
    validate(p);
    return p;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

}  // namespace spincav
