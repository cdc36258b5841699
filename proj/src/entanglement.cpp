#include "spincav/entanglement.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "spincav/errors.hpp"

namespace spincav {

namespace {

constexpr double kUnphysicalSlack = 1e-9;
constexpr double kSeparabilityClamp = 1e-12;

double det2(const Eigen::Matrix2d& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

double det4(const Eigen::Matrix4d& m) {
    return m.determinant();
}

}  // namespace

EntanglementResult log_negativity(const CovarianceMatrix& cov, ModeIndex mu, ModeIndex nu) {
    if (mu == nu) throw DomainError("log_negativity: pair must name two distinct modes");
    // canonical block order keeps E_N bitwise symmetric under pair swap
    const int a = 2 * std::min(static_cast<int>(mu), static_cast<int>(nu));
    const int b = 2 * std::max(static_cast<int>(mu), static_cast<int>(nu));
    const Eigen::Matrix2d Vaa = cov.V.block<2, 2>(a, a);
    const Eigen::Matrix2d Vbb = cov.V.block<2, 2>(b, b);
    const Eigen::Matrix2d Vab = cov.V.block<2, 2>(a, b);
    Eigen::Matrix4d V4;
    V4.block<2, 2>(0, 0) = Vaa;
    V4.block<2, 2>(0, 2) = Vab;
    V4.block<2, 2>(2, 0) = Vab.transpose();
    V4.block<2, 2>(2, 2) = Vbb;

    const double sigma = det2(Vaa) + det2(Vbb) - 2.0 * det2(Vab);
    double disc = sigma * sigma - 4.0 * det4(V4);
    if (disc < -kUnphysicalSlack)
        throw DomainError("log_negativity: covariance matrix is unphysical");
    if (disc < 0.0) disc = 0.0;
    const double inner = sigma - std::sqrt(disc);
    if (inner <= 0.0)
        throw DomainError("log_negativity: covariance block is not a valid state");
    const double eta = std::sqrt(0.5 * inner);

    EntanglementResult result;
    result.mode_a = mu;
    result.mode_b = nu;
    result.stable = true;
    result.eta_minus = eta;
    result.lyapunov_residual = cov.residual;
    if (std::abs(eta - 0.5) <= kSeparabilityClamp)
        result.log_negativity = 0.0;
    else
        result.log_negativity = std::max(0.0, -std::log(2.0 * eta));
    return result;
}

std::array<double, 2> resolve_kerr_shift(const SystemParams& p) {
    if (const auto* shift = std::get_if<KerrShift>(&p.kerr)) return shift->shift;
    const auto& coeff = std::get<KerrCoefficient>(p.kerr);
    const double epsilon0 =
        rabi_frequency(coeff.drive_power, p.kappa_a, drive_frequency(p));
    return solve_steady_state_selfconsistent(p, epsilon0).front().delta_K;
}

CovarianceMatrix covariance_of(const SystemParams& p) {
    validate(p);
    const auto delta_K = resolve_kerr_shift(p);
    return solve_lyapunov(drift_matrix(p, delta_K), diffusion_matrix(p));
}

EntanglementResult entanglement_of(const SystemParams& p, ModeIndex mu, ModeIndex nu) {
    validate(p);
    const auto delta_K = resolve_kerr_shift(p);
    const Mat6 A = drift_matrix(p, delta_K);
    const StabilityReport report = is_stable(A);

    if (!report.stable) {
        EntanglementResult result;
        result.mode_a = mu;
        result.mode_b = nu;
        result.stable = false;
        result.delta_K = delta_K;
        result.max_real_part = report.max_real_part;
        result.stability_margin = report.margin;
        return result;
    }

    const CovarianceMatrix cov = solve_lyapunov(A, diffusion_matrix(p));
    EntanglementResult result = log_negativity(cov, mu, nu);
    result.delta_K = delta_K;
    result.max_real_part = report.max_real_part;
    result.stability_margin = report.margin;
    result.physicality_min_eig = physicality_min_eigenvalue(cov.V);
    return result;
}

}  // namespace spincav
