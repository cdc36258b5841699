#pragma once

#include <vector>

#include "spincav/params.hpp"

namespace spincav {

/// Bogoliubov-transformed magnon frame induced by the Kerr two-magnon terms.
/// Diagnostic only: production entanglement always comes from the exact
/// Lyapunov pipeline.
struct SqueezingFrame {
    std::array<double, 2> r;                    // squeezing parameters
    std::array<double, 2> effective_detuning;   // (delta_m + 2 delta_K) / cosh(2r)
    std::array<double, 2> effective_coupling;   // g cosh(r)
};

/// r = (1/4) ln[(delta_m + delta_K)/(delta_m + 3 delta_K)]. Throws
/// DomainError when the ratio is not positive (frame undefined between
/// -3 delta_K and -delta_K).
double squeezing_parameter(double delta_m, double delta_K);

/// Squeezed-mode detuning (delta_m + 2 delta_K)/cosh(2r(delta_m)).
double squeezed_mode_detuning(double delta_m, double delta_K);

SqueezingFrame squeezing_frame(const SystemParams& p, const std::array<double, 2>& delta_K);

/// One solution of the resonance condition: magnon detunings making the
/// squeezed modes resonant with the cavity at +/-(delta_a - delta_F).
struct ResonanceBranch {
    std::array<int, 2> sign;          // (+1,-1) or (-1,+1)
    std::array<double, 2> delta_m;    // rad/s
    std::array<double, 2> residual;   // |f(root) - target| relative to |target|
};

/// Both sign branches of the resonance condition, solved by bracketed
/// bisection on the domain segments where the squeezing frame is defined,
/// within a window of 10x the cavity detuning. Throws DomainError when
/// delta_a - delta_F = 0 and NoRootError when no branch admits a root.
std::vector<ResonanceBranch> optimal_detunings(double delta_a, double delta_F,
                                               const std::array<double, 2>& delta_K);

}  // namespace spincav
