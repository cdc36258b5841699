#pragma once

#include <optional>

#include "spincav/lyapunov.hpp"
#include "spincav/steady_state.hpp"

namespace spincav {

struct EntanglementResult {
    ModeIndex mode_a = ModeIndex::Magnon1;
    ModeIndex mode_b = ModeIndex::Magnon2;
    bool stable = false;
    std::optional<double> eta_minus;        // smallest PT symplectic eigenvalue
    std::optional<double> log_negativity;   // max{0, -ln 2 eta_minus}
    // diagnostics
    std::array<double, 2> delta_K{};        // realized shifts used, rad/s
    double max_real_part = 0.0;             // rad/s
    double stability_margin = 0.0;          // rad/s
    std::optional<double> lyapunov_residual;
    std::optional<double> physicality_min_eig;
};

/// Log negativity of the two-mode reduction of V. eta_minus follows the
/// closed form from the 2x2 block determinants of the 4x4 reduction.
/// eta_minus within 1e-12 of 1/2 reports exactly 0 to keep sweep outputs
/// clean of sign noise at the separability boundary.
EntanglementResult log_negativity(const CovarianceMatrix& cov, ModeIndex mu, ModeIndex nu);

/// delta_K from whichever kerr variant is populated; the coefficient variant
/// resolves through the self-consistent steady state (highest-photon-number
/// branch) driven at the Rabi frequency of the configured power.
std::array<double, 2> resolve_kerr_shift(const SystemParams& p);

/// Full pipeline up to the steady covariance. Throws UnstableSystemError when
/// the drift matrix is unstable.
CovarianceMatrix covariance_of(const SystemParams& p);

/// Full pipeline: shifts -> drift/diffusion -> stability -> Lyapunov ->
/// negativity. Instability is a reportable outcome (stable=false, no values),
/// not an error.
EntanglementResult entanglement_of(const SystemParams& p,
                                   ModeIndex mu = ModeIndex::Magnon1,
                                   ModeIndex nu = ModeIndex::Magnon2);

}  // namespace spincav
