#include "spincav/lyapunov.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "spincav/errors.hpp"

namespace spincav {

CovarianceMatrix solve_lyapunov(const Mat6& A, const Mat6& D) {
    const StabilityReport report = is_stable(A);
    if (!report.stable)
        throw UnstableSystemError(
            "solve_lyapunov: drift matrix is not stable, steady covariance undefined");

    // column-major vec: vec(AV + VA^T) = (I (x) A + A (x) I) vec(V)
    Eigen::Matrix<double, 36, 36> M = Eigen::Matrix<double, 36, 36>::Zero();
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i)
            for (int k = 0; k < 6; ++k) {
                M(i + 6 * j, k + 6 * j) += A(i, k);
                M(k + 6 * j, k + 6 * i) += A(j, i);
            }
    Eigen::Matrix<double, 36, 1> d;
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) d(i + 6 * j) = -D(i, j);

    Eigen::FullPivLU<Eigen::Matrix<double, 36, 36>> lu(M);
    if (!lu.isInvertible())
        throw NumericError("solve_lyapunov: vectorized system is singular");
    const Eigen::Matrix<double, 36, 1> v = lu.solve(d);
    if (!v.allFinite()) throw NumericError("solve_lyapunov: non-finite solution");

    Mat6 V;
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) V(i, j) = v(i + 6 * j);
    V = 0.5 * (V + V.transpose()).eval();

    CovarianceMatrix result;
    result.V = V;
    result.residual = (A * V + V * A.transpose() + D).cwiseAbs().maxCoeff();
    return result;
}

Mat6 symplectic_form() {
    Mat6 J = Mat6::Zero();
    for (int k = 0; k < 3; ++k) {
        J(2 * k, 2 * k + 1) = 1.0;
        J(2 * k + 1, 2 * k) = -1.0;
    }
    return J;
}

double physicality_min_eigenvalue(const Mat6& V) {
    using Mat6c = Eigen::Matrix<std::complex<double>, 6, 6>;
    const Mat6 J = symplectic_form();
    Mat6c H = V.cast<std::complex<double>>() +
              std::complex<double>(0.0, 0.5) * J.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Mat6c> solver(H, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericError("physicality check: eigenvalue computation failed");
    return solver.eigenvalues().minCoeff();
}

}  // namespace spincav
