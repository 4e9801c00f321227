#pragma once

#include <Eigen/Dense>
#include <string>

namespace mldsc {

// (M + M^T) / 2. Throws std::invalid_argument for non-square input.
Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m);

// Solves S X = rhs for symmetric S via Cholesky. If the factorization fails,
// retries with S + eps*tr(S)/n*I, eps = 1e-9, escalating eps by 100x at most
// 3 times. Throws SingularMatrixError (naming `label`) when still singular.
Eigen::MatrixXd spd_solve(const Eigen::MatrixXd& s, const Eigen::MatrixXd& rhs,
                          const std::string& label = "matrix");

// Smallest / largest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Eigen::MatrixXd& m);
double max_abs_eigenvalue(const Eigen::MatrixXd& m);

// Symmetric PSD square root via eigendecomposition (negative eigenvalues
// clamped to zero). Used to draw from N(mu, Sigma) with singular Sigma.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m);

}  // namespace mldsc
