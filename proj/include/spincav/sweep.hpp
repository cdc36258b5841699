#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincav/config.hpp"
#include "spincav/entanglement.hpp"

namespace spincav {

/// Sweepable scalars. Axis values use the config entry units: MHz for
/// frequencies, rates and shifts, mK for temperature.
enum class SweepParameter {
    DeltaA,
    DeltaM1,
    DeltaM2,
    DeltaMBoth,   // antisymmetric axes collapsed: sets both detunings
    DeltaF,
    DeltaK1,
    DeltaK2,
    DeltaKBoth,
    G1,
    G2,
    GBoth,
    KappaA,
    KappaM1,
    KappaM2,
    KappaMBoth,
    Temperature,
};

const char* sweep_parameter_name(SweepParameter p);
SweepParameter sweep_parameter_from_name(const std::string& name);

struct SweepAxis {
    SweepParameter parameter;
    double min_value;
    double max_value;
    int points;
};

struct SweepSpec {
    ConfigDoc base;
    std::vector<SweepAxis> axes;  // one or two; filled from the preset if set
    ModeIndex pair_a = ModeIndex::Magnon1;
    ModeIndex pair_b = ModeIndex::Magnon2;
    std::optional<std::string> preset;
};

struct SweepPoint {
    std::optional<double> log_negativity;  // absent at unstable/error points
    std::optional<double> eta_minus;
    bool stable = false;
    std::string error_code;  // empty on success, "unstable" on instability
};

struct SweepResult {
    std::vector<SweepAxis> axes;                // resolved (post-preset)
    std::vector<std::vector<double>> grids;     // axis values, one vector per axis
    std::vector<SweepPoint> points;             // row-major over axes
    ConfigDoc base;                             // resolved base (post-preset)
    ModeIndex pair_a = ModeIndex::Magnon1;
    ModeIndex pair_b = ModeIndex::Magnon2;
    std::optional<std::string> preset;
};

/// Evaluate the entanglement pipeline at every grid point. Per-point failures
/// are recorded in the point's error code and never abort the sweep. Results
/// are deterministic and independent of the worker count (capped by
/// max_workers if positive, else by SPINCAV_MAX_WORKERS, else hardware).
SweepResult run_sweep(const SweepSpec& spec, int max_workers = 0);

enum class FlipKind { Sagnac, Kerr };

/// The same sweep under both signs of the Sagnac (or Kerr) shift, plus the
/// pointwise difference E_N(+) - E_N(-).
struct NonreciprocityMap {
    SweepResult plus;
    SweepResult minus;
    std::vector<std::optional<double>> difference;
};
NonreciprocityMap nonreciprocity_map(const SweepSpec& spec, FlipKind flip,
                                     int max_workers = 0);

/// Figure-panel presets: axes plus the panel's fixed shifts and detunings.
struct Preset {
    std::string name;
    std::string description;
    std::vector<SweepAxis> axes;
    std::optional<std::array<double, 2>> kerr_shift_MHz;
    std::optional<double> sagnac_shift_MHz;
    std::optional<std::array<double, 2>> delta_m_MHz;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

/// Preset overrides applied to a base config.
ConfigDoc apply_preset(const Preset& preset, ConfigDoc base);

}  // namespace spincav
