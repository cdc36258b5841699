#pragma once

#include <Eigen/Core>
#include <complex>

#include "spincav/params.hpp"

namespace spincav {

using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Linearized quadrature dynamics du/dt = A u + noise, with diffusion D.
struct LinearModel {
    Mat6 A;
    Mat6 D;
    double cavity_detuning;                    // delta_a - delta_F
    std::array<double, 2> magnon_detuning_x;   // delta_m + delta_K
    std::array<double, 2> magnon_detuning_y;   // delta_m + 3 delta_K
    std::array<double, 3> occupations;         // N_a, N_m1, N_m2
};

/// Drift matrix in the (X_a, Y_a, X_m1, Y_m1, X_m2, Y_m2) ordering. The
/// magnon blocks are asymmetric: +(delta_m + delta_K) above the diagonal,
/// -(delta_m + 3 delta_K) below, the Kerr two-magnon term carrying the
/// asymmetry.
Mat6 drift_matrix(const SystemParams& p, const std::array<double, 2>& delta_K);

/// Diagonal diffusion matrix, kappa(2N+1) per quadrature.
Mat6 diffusion_matrix(const SystemParams& p);

LinearModel build_linear_model(const SystemParams& p, const std::array<double, 2>& delta_K);

struct StabilityReport {
    bool stable;
    double max_real_part;  // rad/s
    double margin;         // rad/s; stable iff max_real_part < -margin
    std::array<std::complex<double>, 6> eigenvalues;
};

/// Eigenvalue test of the Routh-Hurwitz condition. The margin is relative to
/// the largest decay rate, read off the drift-matrix diagonal.
StabilityReport is_stable(const Mat6& A);

}  // namespace spincav
