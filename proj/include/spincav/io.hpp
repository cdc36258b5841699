#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "spincav/config.hpp"
#include "spincav/entanglement.hpp"
#include "spincav/linear_model.hpp"
#include "spincav/squeezing.hpp"
#include "spincav/steady_state.hpp"
#include "spincav/sweep.hpp"

namespace spincav {

/// Every output artifact embeds this record: the subcommand, tool identity,
/// a hash of the raw config text, and the parameters both as entered and as
/// converted to internal units.
nlohmann::json manifest_json(const std::string& subcommand, const ConfigDoc& doc,
                             std::uint64_t config_hash);

nlohmann::json steady_state_json(const std::vector<SteadyState>& solutions,
                                 const std::string& mode, double epsilon0);
nlohmann::json stability_json(const StabilityReport& report,
                              const std::array<double, 2>& delta_K);
nlohmann::json entangle_json(const EntanglementResult& result);
nlohmann::json resonance_json(const std::vector<ResonanceBranch>& branches,
                              const SystemParams& params, double delta_F,
                              const std::array<double, 2>& delta_K);

/// Deterministic data section of a sweep (no metadata). Header line:
/// axis1,axis2,E_N,eta_minus,stable,error_code  -- axis2 empty for 1D sweeps.
std::string sweep_csv_data(const SweepResult& result);
/// Data section preceded by "# manifest: {...}" comment lines.
std::string sweep_csv(const SweepResult& result, const nlohmann::json& manifest);

nlohmann::json sweep_data_json(const SweepResult& result);
nlohmann::json sweep_json(const SweepResult& result, const nlohmann::json& manifest);
nlohmann::json nonreciprocity_json(const NonreciprocityMap& map,
                                   const nlohmann::json& manifest);

nlohmann::json presets_json();

std::string mode_pair_name(ModeIndex a, ModeIndex b);
std::pair<ModeIndex, ModeIndex> parse_mode_pair(const std::string& name);

/// Shortest round-trip decimal form, used for CSV cells.
std::string format_double(double value);

}  // namespace spincav
