#pragma once

#include <complex>
#include <vector>

#include "spincav/params.hpp"

namespace spincav {

/// Classical mean-field fixed point of the driven system.
struct SteadyState {
    std::complex<double> a_s;                  // cavity amplitude
    std::array<std::complex<double>, 2> m_s;   // magnon amplitudes
    std::array<double, 2> delta_K;             // realized Kerr shifts, rad/s
    double photon_number;                      // |a_s|^2
    std::array<double, 2> magnon_numbers;      // |m_js|^2
    double residual;                           // normalized max residual of the fixed-point equations
};

struct SteadyStateOptions {
    double tolerance = 1e-10;  // accepted normalized residual
    int max_iterations = 500;  // per start
    int n_starts = 16;
};

/// Kerr shifts held fixed (kerr must be the shift variant): the fixed-point
/// equations are a linear 3x3 complex system with a unique solution.
/// Throws SingularSystemError when the system matrix is numerically singular.
SteadyState solve_steady_state_shift_mode(const SystemParams& p, double epsilon0);

/// Kerr coefficients given (kerr must be the coefficient variant): damped
/// Newton iteration on the map delta_K -> amplitudes -> 2K|m|^2 from a grid
/// of initial shift guesses. Distinct converged solutions are returned sorted
/// by |a_s|^2 descending; more than one entry signals multistability.
/// Throws ConvergenceError only if every start fails.
std::vector<SteadyState> solve_steady_state_selfconsistent(
    const SystemParams& p, double epsilon0, const SteadyStateOptions& options = {});

/// Steady states for the two drive directions, delta_F = +|shift| and -|shift|.
struct DirectionalOccupations {
    SteadyState cw;   // delta_F = +|shift|
    SteadyState ccw;  // delta_F = -|shift|
};
DirectionalOccupations nonreciprocity_of_occupations(const SystemParams& p, double epsilon0);

/// Reporting helper: global phase rotation making m_1s real non-negative.
/// Occupations and Kerr shifts are unaffected.
SteadyState rotated_to_real_m1(SteadyState s);

}  // namespace spincav
