#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>

#include "mldsc/sweep.hpp"

namespace mldsc {

enum class PolicyKind {
    MldscOptimal,  // u^i = -R_i^{-1} B_i' (Phi K_i s_hat + Psi mu)
    PsiSwap,       // Phi replaced by Psi in the deviation term
    PiSwap,        // Phi replaced by Pi in the deviation term
    Cosc,          // full-state feedback -R_i^{-1} B_i' (Psi s_hat + Psi mu)
    Mlposc,        // joint-memory feedback -R_i^{-1} B_i' (Pi K s_hat + Psi mu)
};

const char* policy_kind_name(PolicyKind kind);

// Evaluable feedback law. Immutable after construction; evaluation is pure.
struct Policy {
    PolicyKind kind = PolicyKind::MldscOptimal;
    std::shared_ptr<const LqgProblem> problem;
    MatrixTrajectory psi;       // mean feedthrough gain (all kinds)
    MatrixTrajectory feedback;  // Phi, Psi or Pi: multiplies K s_hat
    MatrixTrajectory mu;
    MatrixTrajectory Sigma;     // drives K (unused by Cosc)
};

// Assembles a policy from solved sweeps. mlposc_sol is required for PiSwap
// and Mlposc. The swap policies default to a self-consistent Sigma
// (re-propagated with the swapped gain closing the covariance loop);
// reuse_optimal_sigma reuses the decentralized-optimal Sigma instead.
Policy make_policy(PolicyKind kind, const Solution& mldsc_sol,
                   const Solution* mlposc_sol = nullptr,
                   bool reuse_optimal_sigma = false);

struct FeedbackMatrix {
    Eigen::MatrixXd F;            // d_u[i] x d_s, applied to the embedded deviation
    Eigen::VectorXd feedthrough;  // -R_i^{-1} B_i' Psi mu
};

// Composite linear law u^i = F s_hat_embed + feedthrough at time t.
FeedbackMatrix feedback_matrix(const Policy& pol, int i, double t);

// Evaluates controller i's control. `info` is a d_s vector; entries outside
// the kind's information set (z^i for decentralized kinds, the joint memory
// for Mlposc, everything for Cosc) are masked to zero before the deviation
// s_hat_embed = embed(info) - mu(t) is formed, so decentralization is
// structural. Throws ContractError on a size mismatch.
Eigen::VectorXd evaluate_control(const Policy& pol, int i, double t,
                                 const Eigen::VectorXd& info);

}  // namespace mldsc
