#pragma once

#include "spincav/linear_model.hpp"

namespace spincav {

/// Steady-state covariance matrix, vacuum variance 1/2 convention.
struct CovarianceMatrix {
    Mat6 V;
    double residual;  // ||A V + V A^T + D||_max after symmetrization
};

/// Unique symmetric solution of A V + V A^T + D = 0 for stable A, via a dense
/// solve of the Kronecker-vectorized system. Throws UnstableSystemError when
/// A is not stable.
CovarianceMatrix solve_lyapunov(const Mat6& A, const Mat6& D);

/// Symplectic form J built from 2x2 blocks [[0,1],[-1,0]] on the diagonal.
Mat6 symplectic_form();

/// Smallest eigenvalue of V + (i/2) J; physical states satisfy >= 0 up to
/// numerical slack.
double physicality_min_eigenvalue(const Mat6& V);

}  // namespace spincav
