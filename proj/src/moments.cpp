#include "mldsc/moments.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mldsc/errors.hpp"
#include "mldsc/integrate.hpp"
#include "mldsc/linalg.hpp"

namespace mldsc {

Eigen::MatrixXd memory_gain(const Eigen::MatrixXd& Sigma, int i,
                            const BlockPartition& partition) {
    const int d_s = partition.d_s();
    const int zi = partition.z_begin(i);
    const int dz = partition.z_dim(i);

    // z^i columns hold Sigma_{. z^i} Sigma_{z^i z^i}^{-1}; the (z^i, z^i)
    // block is the identity exactly, every other column is exactly zero.
    const Eigen::MatrixXd Szz = Sigma.block(zi, zi, dz, dz);
    const Eigen::MatrixXd cross = Sigma.block(zi, 0, dz, d_s);  // Sigma_{z^i, .}
    const Eigen::MatrixXd cols =
        spd_solve(Szz, cross, "Sigma_z" + std::to_string(i) + "z" + std::to_string(i))
            .transpose();

    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(d_s, d_s);
    K.block(0, zi, d_s, dz) = cols;
    K.block(zi, zi, dz, dz) = Eigen::MatrixXd::Identity(dz, dz);
    return K;
}

Eigen::MatrixXd joint_memory_gain(const Eigen::MatrixXd& Sigma,
                                  const BlockPartition& partition) {
    const int d_s = partition.d_s();
    const int d_x = partition.d_x();
    const int dz = partition.z_total();

    const Eigen::MatrixXd Szz = Sigma.block(d_x, d_x, dz, dz);
    const Eigen::MatrixXd Szx = Sigma.block(d_x, 0, dz, d_x);
    const Eigen::MatrixXd top = spd_solve(Szz, Szx, "Sigma_zz").transpose();

    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(d_s, d_s);
    K.block(0, d_x, d_x, dz) = top;
    K.block(d_x, d_x, dz, dz) = Eigen::MatrixXd::Identity(dz, dz);
    return K;
}

MomentTrajectory propagate_moments(const LqgProblem& p, const MatrixTrajectory& Psi,
                                   const MatrixTrajectory& Phi, GainRule rule) {
    const int d_s = p.state_dim();
    const int N = p.n_controllers();
    const Eigen::MatrixXd noise = p.sigma * p.sigma.transpose();
    const Eigen::MatrixXd gram = p.control_gram();
    std::vector<Eigen::MatrixXd> gram_i(N);
    for (int i = 0; i < N; ++i) gram_i[i] = p.control_gram(i);

    StageSampler psi(Psi);
    StageSampler phi(Phi);

    // Stacked value: column 0 = mu, columns 1..d_s = Sigma. The two blocks
    // are not coupled, but sharing one RK4 march keeps them on one grid.
    auto rhs = [&](double t, const Eigen::MatrixXd& y) {
        const Eigen::VectorXd mu = y.col(0);
        const Eigen::MatrixXd Sigma = y.rightCols(d_s);
        const Eigen::MatrixXd phi_t = phi.at(t);

        Eigen::MatrixXd a_cl = p.A;
        switch (rule) {
            case GainRule::PerController:
                for (int i = 0; i < N; ++i)
                    a_cl -= gram_i[i] * phi_t * memory_gain(Sigma, i, p.partition);
                break;
            case GainRule::Joint:
                a_cl -= gram * phi_t * joint_memory_gain(Sigma, p.partition);
                break;
            case GainRule::FullInformation:
                a_cl -= gram * phi_t;
                break;
        }

        Eigen::MatrixXd dy(d_s, d_s + 1);
        dy.col(0) = (p.A - gram * psi.at(t)) * mu;
        dy.rightCols(d_s) = noise + a_cl * Sigma + Sigma * a_cl.transpose();
        return dy;
    };

    auto project = [d_s](Eigen::MatrixXd& y) {
        y.rightCols(d_s) = 0.5 * (y.rightCols(d_s) + y.rightCols(d_s).transpose()).eval();
    };

    Eigen::MatrixXd boundary(d_s, d_s + 1);
    boundary.col(0) = p.mu0;
    boundary.rightCols(d_s) = p.Sigma0;

    const MatrixTrajectory stacked =
        integrate_ode(rhs, boundary, Psi.grid(), Direction::Forward, project);

    MomentTrajectory out;
    out.mu = MatrixTrajectory(Psi.grid(), d_s, 1);
    out.Sigma = MatrixTrajectory(Psi.grid(), d_s, d_s);
    for (int k = 0; k < stacked.n_nodes(); ++k) {
        out.mu.value(k) = stacked.value(k).col(0);
        out.Sigma.value(k) = stacked.value(k).rightCols(d_s);
    }
    return out;
}

Eigen::MatrixXd conditional_covariance(const Eigen::MatrixXd& Sigma,
                                       const std::vector<int>& a_idx,
                                       const std::vector<int>& b_idx) {
    std::set<int> overlap_check(a_idx.begin(), a_idx.end());
    for (int b : b_idx)
        if (overlap_check.count(b))
            throw std::invalid_argument(
                "conditional_covariance: index sets overlap at " + std::to_string(b));

    const auto na = static_cast<Eigen::Index>(a_idx.size());
    const auto nb = static_cast<Eigen::Index>(b_idx.size());
    Eigen::MatrixXd Saa(na, na), Sab(na, nb), Sbb(nb, nb);
    for (Eigen::Index r = 0; r < na; ++r)
        for (Eigen::Index c = 0; c < na; ++c) Saa(r, c) = Sigma(a_idx[r], a_idx[c]);
    for (Eigen::Index r = 0; r < na; ++r)
        for (Eigen::Index c = 0; c < nb; ++c) Sab(r, c) = Sigma(a_idx[r], b_idx[c]);
    for (Eigen::Index r = 0; r < nb; ++r)
        for (Eigen::Index c = 0; c < nb; ++c) Sbb(r, c) = Sigma(b_idx[r], b_idx[c]);

    return symmetrize(Saa - Sab * spd_solve(Sbb, Sab.transpose(), "Sigma_bb"));
}

}  // namespace mldsc
