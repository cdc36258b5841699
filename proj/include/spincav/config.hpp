#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spincav/params.hpp"

namespace spincav {

/// Config-file representation: ordinary frequencies f = omega/2pi in MHz (or
/// GHz for the cavity), temperatures in mK, powers in mW. Conversion to
/// internal rad/s happens once, in to_params().
struct ConfigDoc {
    enum class OmegaUnit { GHz, MHz };
    OmegaUnit omega_a_unit = OmegaUnit::GHz;
    double omega_a = 10.0;
    double delta_a_MHz = 0.0;
    std::array<double, 2> delta_m_MHz{0.0, 0.0};
    double kappa_a_MHz = 1.0;
    std::array<double, 2> kappa_m_MHz{1.0, 1.0};
    std::array<double, 2> g_MHz{0.0, 0.0};

    std::optional<std::array<double, 2>> kerr_shift_MHz;
    std::optional<std::array<double, 2>> kerr_coefficient_nHz;
    std::optional<double> kerr_drive_power_mW;

    std::optional<double> sagnac_shift_MHz;
    std::optional<double> sagnac_spin_rate_kHz;
    std::optional<double> sagnac_refractive_index;
    std::optional<double> sagnac_radius_mm;
    double sagnac_dn_dlambda_per_m = 0.0;
    DriveDirection sagnac_direction = DriveDirection::CW;

    double temperature_mK = 0.0;
    double drive_phase_rad = 0.0;
};

/// Strict parse: unknown keys, missing fields, wrong types and violated
/// exclusivity rules are hard errors naming the field path.
ConfigDoc parse_config(const std::string& json_text);
ConfigDoc load_config(const std::string& path);

/// Inverse of parse_config up to formatting; numbers round-trip.
std::string serialize_config(const ConfigDoc& doc);

/// Convert to internal units and validate every parameter invariant.
SystemParams to_params(const ConfigDoc& doc);

/// FNV-1a hash of the raw config text, for run manifests.
std::uint64_t fnv1a(const std::string& text);

}  // namespace spincav
