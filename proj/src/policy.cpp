#include "mldsc/policy.hpp"

#include <stdexcept>

#include "mldsc/errors.hpp"
#include "mldsc/linalg.hpp"

namespace mldsc {

const char* policy_kind_name(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::MldscOptimal: return "mldsc";
        case PolicyKind::PsiSwap: return "psi";
        case PolicyKind::PiSwap: return "pi";
        case PolicyKind::Cosc: return "cosc";
        case PolicyKind::Mlposc: return "mlposc";
    }
    return "?";
}

Policy make_policy(PolicyKind kind, const Solution& mldsc_sol,
                   const Solution* mlposc_sol, bool reuse_optimal_sigma) {
    if (!mldsc_sol.gains.phi)
        throw std::invalid_argument("make_policy: mldsc solution lacks the Phi gain");
    if ((kind == PolicyKind::PiSwap || kind == PolicyKind::Mlposc) &&
        (mlposc_sol == nullptr || !mlposc_sol->gains.pi))
        throw std::invalid_argument("make_policy: this kind needs an mlposc solution");

    const LqgProblem& p = *mldsc_sol.problem;
    Policy pol;
    pol.kind = kind;
    pol.problem = mldsc_sol.problem;
    pol.psi = mldsc_sol.gains.psi;
    pol.mu = mldsc_sol.moments.mu;

    switch (kind) {
        case PolicyKind::MldscOptimal:
            pol.feedback = *mldsc_sol.gains.phi;
            pol.Sigma = mldsc_sol.moments.Sigma;
            break;
        case PolicyKind::PsiSwap:
            pol.feedback = mldsc_sol.gains.psi;
            // Deployed heuristic gain: the covariance that feeds K_i is the
            // one this very law induces, unless the caller opts out.
            pol.Sigma = reuse_optimal_sigma
                            ? mldsc_sol.moments.Sigma
                            : propagate_moments(p, pol.psi, pol.feedback,
                                                GainRule::PerController)
                                  .Sigma;
            break;
        case PolicyKind::PiSwap:
            pol.feedback = *mlposc_sol->gains.pi;
            pol.Sigma = reuse_optimal_sigma
                            ? mldsc_sol.moments.Sigma
                            : propagate_moments(p, pol.psi, pol.feedback,
                                                GainRule::PerController)
                                  .Sigma;
            break;
        case PolicyKind::Cosc:
            pol.feedback = mldsc_sol.gains.psi;
            pol.Sigma = mldsc_sol.moments.Sigma;  // unused
            break;
        case PolicyKind::Mlposc:
            pol.feedback = *mlposc_sol->gains.pi;
            pol.Sigma = mlposc_sol->moments.Sigma;
            break;
    }
    return pol;
}

FeedbackMatrix feedback_matrix(const Policy& pol, int i, double t) {
    const LqgProblem& p = *pol.problem;
    const Eigen::MatrixXd gain = pol.feedback.sample_at(t);
    const Eigen::VectorXd mu_t = pol.mu.sample_at(t).col(0);

    Eigen::MatrixXd composed;
    switch (pol.kind) {
        case PolicyKind::MldscOptimal:
        case PolicyKind::PsiSwap:
        case PolicyKind::PiSwap:
            composed = gain * memory_gain(pol.Sigma.sample_at(t), i, p.partition);
            break;
        case PolicyKind::Cosc:
            composed = gain;
            break;
        case PolicyKind::Mlposc:
            composed = gain * joint_memory_gain(pol.Sigma.sample_at(t), p.partition);
            break;
    }

    FeedbackMatrix out;
    const Eigen::MatrixXd bt = p.B[i].transpose();
    out.F = -spd_solve(p.R[i], bt * composed, "R block " + std::to_string(i));
    out.feedthrough =
        -spd_solve(p.R[i], bt * (pol.psi.sample_at(t) * mu_t),
                   "R block " + std::to_string(i));
    return out;
}

namespace {

// Masks `info` down to the kind's information set, zeroing everything else.
Eigen::VectorXd embed_information(const Policy& pol, int i,
                                  const Eigen::VectorXd& info) {
    const BlockPartition& part = pol.problem->partition;
    if (info.size() != part.d_s())
        throw ContractError("evaluate_control: info has size " +
                            std::to_string(info.size()) + ", expected d_s = " +
                            std::to_string(part.d_s()));

    switch (pol.kind) {
        case PolicyKind::Cosc:
            return info;
        case PolicyKind::Mlposc: {
            Eigen::VectorXd e = Eigen::VectorXd::Zero(part.d_s());
            e.tail(part.z_total()) = info.tail(part.z_total());
            return e;
        }
        default: {
            Eigen::VectorXd e = Eigen::VectorXd::Zero(part.d_s());
            e.segment(part.z_begin(i), part.z_dim(i)) =
                info.segment(part.z_begin(i), part.z_dim(i));
            return e;
        }
    }
}

}  // namespace

Eigen::VectorXd evaluate_control(const Policy& pol, int i, double t,
                                 const Eigen::VectorXd& info) {
    if (i < 0 || i >= pol.problem->n_controllers())
        throw ContractError("evaluate_control: controller index out of range");
    const FeedbackMatrix fb = feedback_matrix(pol, i, t);
    const Eigen::VectorXd deviation =
        embed_information(pol, i, info) - pol.mu.sample_at(t).col(0);
    return fb.F * deviation + fb.feedthrough;
}

}  // namespace mldsc
