#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mldsc/problem.hpp"
#include "mldsc/trajectory.hpp"

namespace mldsc {

// Which conditional-mean gain closes the covariance feedback loop.
enum class GainRule {
    PerController,    // K_i(Sigma) per controller (decentralized)
    Joint,            // joint-memory K(Sigma)
    FullInformation,  // K = I (test hook; coupling vanishes)
};

// Memory gain K_i: maps the extended-state deviation to E[s | z^i] - mu.
// Zero except for the z^i columns, which hold Sigma_{. z^i} Sigma_{z^i z^i}^{-1}
// block by block with an exact identity at the (z^i, z^i) block.
Eigen::MatrixXd memory_gain(const Eigen::MatrixXd& Sigma, int i,
                            const BlockPartition& partition);

// Joint-memory gain K = [[0, Sigma_xz Sigma_zz^{-1}], [0, I]].
Eigen::MatrixXd joint_memory_gain(const Eigen::MatrixXd& Sigma,
                                  const BlockPartition& partition);

struct MomentTrajectory {
    MatrixTrajectory mu;     // d_s x 1 per node
    MatrixTrajectory Sigma;  // d_s x d_s per node, symmetric
};

// Forward closed-loop moment propagation from (mu0, Sigma0):
//   mu'    = (A - B R^{-1} B' Psi) mu
//   Sigma' = sigma sigma' + A_cl Sigma + Sigma A_cl'
// with A_cl = A - sum_i B_i R_i^{-1} B_i' Phi K_i and K_i rebuilt from the
// current Sigma at every RK4 stage under the chosen rule. Sigma is
// symmetrized after every step.
MomentTrajectory propagate_moments(const LqgProblem& p, const MatrixTrajectory& Psi,
                                   const MatrixTrajectory& Phi, GainRule rule);

// Schur complement Sigma_aa - Sigma_ab Sigma_bb^{-1} Sigma_ba (the estimation
// error of a from b), symmetrized. Index sets must be disjoint.
Eigen::MatrixXd conditional_covariance(const Eigen::MatrixXd& Sigma,
                                       const std::vector<int>& a_idx,
                                       const std::vector<int>& b_idx);

}  // namespace mldsc
