#include "spincav/linear_model.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "spincav/errors.hpp"

namespace spincav {

Mat6 drift_matrix(const SystemParams& p, const std::array<double, 2>& delta_K) {
    const double deff = p.delta_a - resolve_sagnac_shift(p);
    const double g1 = p.g[0], g2 = p.g[1];
    const double dx1 = p.delta_m[0] + delta_K[0];
    const double dy1 = p.delta_m[0] + 3.0 * delta_K[0];
    const double dx2 = p.delta_m[1] + delta_K[1];
    const double dy2 = p.delta_m[1] + 3.0 * delta_K[1];
    Mat6 A;
    A << -p.kappa_a, deff, 0.0, g1, 0.0, g2,
         -deff, -p.kappa_a, -g1, 0.0, -g2, 0.0,
         0.0, g1, -p.kappa_m[0], dx1, 0.0, 0.0,
         -g1, 0.0, -dy1, -p.kappa_m[0], 0.0, 0.0,
         0.0, g2, 0.0, 0.0, -p.kappa_m[1], dx2,
         -g2, 0.0, 0.0, 0.0, -dy2, -p.kappa_m[1];
    return A;
}

Mat6 diffusion_matrix(const SystemParams& p) {
    const double Na = thermal_occupation(mode_frequency(p, ModeIndex::Cavity), p.temperature);
    const double N1 = thermal_occupation(mode_frequency(p, ModeIndex::Magnon1), p.temperature);
    const double N2 = thermal_occupation(mode_frequency(p, ModeIndex::Magnon2), p.temperature);
    Mat6 D = Mat6::Zero();
    D(0, 0) = D(1, 1) = p.kappa_a * (2.0 * Na + 1.0);
    D(2, 2) = D(3, 3) = p.kappa_m[0] * (2.0 * N1 + 1.0);
    D(4, 4) = D(5, 5) = p.kappa_m[1] * (2.0 * N2 + 1.0);
    return D;
}

LinearModel build_linear_model(const SystemParams& p, const std::array<double, 2>& delta_K) {
    LinearModel m;
    m.A = drift_matrix(p, delta_K);
    m.D = diffusion_matrix(p);
    m.cavity_detuning = p.delta_a - resolve_sagnac_shift(p);
    m.magnon_detuning_x = {p.delta_m[0] + delta_K[0], p.delta_m[1] + delta_K[1]};
    m.magnon_detuning_y = {p.delta_m[0] + 3.0 * delta_K[0], p.delta_m[1] + 3.0 * delta_K[1]};
    m.occupations = {m.D(0, 0) / (2.0 * p.kappa_a) - 0.5,
                     m.D(2, 2) / (2.0 * p.kappa_m[0]) - 0.5,
                     m.D(4, 4) / (2.0 * p.kappa_m[1]) - 0.5};
    return m;
}

StabilityReport is_stable(const Mat6& A) {
    if (!A.allFinite()) throw NumericError("is_stable: drift matrix has non-finite entries");
    Eigen::EigenSolver<Mat6> solver(A, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericError("is_stable: eigenvalue computation failed");
    StabilityReport report;
    double max_real = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 6; ++i) {
        report.eigenvalues[i] = solver.eigenvalues()(i);
        max_real = std::max(max_real, solver.eigenvalues()(i).real());
    }
    const double kappa_max =
        std::max({std::abs(A(0, 0)), std::abs(A(2, 2)), std::abs(A(4, 4))});
    report.margin = 1e-6 * kappa_max;
    report.max_real_part = max_real;
    report.stable = max_real < -report.margin;
    return report;
}

}  // namespace spincav
