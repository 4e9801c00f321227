#include "mldsc/linalg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <stdexcept>

#include "mldsc/errors.hpp"

namespace mldsc {

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("symmetrize: matrix is not square");
    return 0.5 * (m + m.transpose());
}

Eigen::MatrixXd spd_solve(const Eigen::MatrixXd& s, const Eigen::MatrixXd& rhs,
                          const std::string& label) {
    const auto n = s.rows();
    if (s.cols() != n) throw std::invalid_argument("spd_solve: matrix is not square");
    if (rhs.rows() != n) throw std::invalid_argument("spd_solve: rhs row mismatch");

    Eigen::LLT<Eigen::MatrixXd> llt(s);
    if (llt.info() == Eigen::Success) return llt.solve(rhs);

    const double scale = s.trace() / static_cast<double>(n);
    double eps = 1e-9;
    for (int attempt = 0; attempt < 3; ++attempt, eps *= 100.0) {
        Eigen::MatrixXd jittered = s;
        jittered.diagonal().array() += eps * scale;
        llt.compute(jittered);
        if (llt.info() == Eigen::Success) return llt.solve(rhs);
    }
    throw SingularMatrixError("spd_solve: " + label +
                              " not positive definite after jitter escalation");
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double max_abs_eigenvalue(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXd lambda = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * lambda.asDiagonal();
}

}  // namespace mldsc
