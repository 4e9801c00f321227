// Backward solvers of the gain system: the standard Riccati flow, its
// decentralized and joint-memory augmentations, and the affine value terms.
// Each solver is a pure backward RK4 pass over a supplied Sigma path; the
// fixed-point coupling between Sigma and the gains lives in sweep.cpp.

#include "mldsc/riccati.hpp"

#include "mldsc/errors.hpp"
#include "mldsc/integrate.hpp"
#include "mldsc/linalg.hpp"

namespace mldsc {

MatrixTrajectory solve_riccati(const LqgProblem& p, const TimeGrid& grid) {
    const Eigen::MatrixXd gram = p.control_gram();
    auto rhs = [&](double, const Eigen::MatrixXd& psi) -> Eigen::MatrixXd {
        return -(p.Q + p.A.transpose() * psi + psi * p.A - psi * gram * psi);
    };
    auto project = [](Eigen::MatrixXd& m) { m = 0.5 * (m + m.transpose()).eval(); };
    return integrate_ode(rhs, p.P, grid, Direction::Backward, project);
}

Eigen::MatrixXd coupling_term(const Eigen::MatrixXd& Phi_t, const Eigen::MatrixXd& K_i,
                              const Eigen::MatrixXd& B_i, const Eigen::MatrixXd& R_ii) {
    const Eigen::MatrixXd m =
        B_i.transpose() * Phi_t *
        (Eigen::MatrixXd::Identity(K_i.rows(), K_i.cols()) - K_i);
    return symmetrize(m.transpose() * spd_solve(R_ii, m, "R block"));
}

namespace {

// Shared backward pass for the two augmented Riccati flows. build_coupling
// returns sum_i Q_i for the stage's (gain, Sigma) pair.
template <typename CouplingFn>
MatrixTrajectory solve_augmented(const LqgProblem& p, const MatrixTrajectory& Sigma,
                                 CouplingFn build_coupling) {
    const Eigen::MatrixXd gram = p.control_gram();
    StageSampler sigma(Sigma);

    auto rhs = [&](double t, const Eigen::MatrixXd& g) -> Eigen::MatrixXd {
        return -(p.Q + p.A.transpose() * g + g * p.A - g * gram * g +
                 build_coupling(g, sigma.at(t)));
    };
    auto project = [](Eigen::MatrixXd& m) { m = 0.5 * (m + m.transpose()).eval(); };
    return integrate_ode(rhs, p.P, Sigma.grid(), Direction::Backward, project);
}

}  // namespace

MatrixTrajectory solve_decentralized_riccati(const LqgProblem& p,
                                             const MatrixTrajectory& Sigma,
                                             bool identity_override) {
    const int d_s = p.state_dim();
    return solve_augmented(
        p, Sigma,
        [&, d_s](const Eigen::MatrixXd& phi, const Eigen::MatrixXd& sig) {
            Eigen::MatrixXd total = Eigen::MatrixXd::Zero(d_s, d_s);
            if (identity_override) return total;
            for (int i = 0; i < p.n_controllers(); ++i)
                total += coupling_term(phi, memory_gain(sig, i, p.partition), p.B[i],
                                       p.R[i]);
            return total;
        });
}

MatrixTrajectory solve_po_riccati(const LqgProblem& p, const MatrixTrajectory& Sigma,
                                  bool identity_override) {
    const int d_s = p.state_dim();
    return solve_augmented(
        p, Sigma,
        [&, d_s](const Eigen::MatrixXd& pi, const Eigen::MatrixXd& sig) {
            Eigen::MatrixXd total = Eigen::MatrixXd::Zero(d_s, d_s);
            if (identity_override) return total;
            const Eigen::MatrixXd k = joint_memory_gain(sig, p.partition);
            for (int i = 0; i < p.n_controllers(); ++i)
                total += coupling_term(pi, k, p.B[i], p.R[i]);
            return total;
        });
}

AffineValueTerms solve_affine_terms(const LqgProblem& p, const MatrixTrajectory& gain,
                                    const MatrixTrajectory& mu,
                                    const MatrixTrajectory& Sigma, GainRule rule) {
    const int d_s = p.state_dim();
    const Eigen::MatrixXd gram = p.control_gram();
    const Eigen::MatrixXd noise = p.sigma * p.sigma.transpose();
    StageSampler gain_s(gain);
    StageSampler mu_s(mu);
    StageSampler sigma_s(Sigma);

    auto coupling_sum = [&](const Eigen::MatrixXd& g,
                            const Eigen::MatrixXd& sig) -> Eigen::MatrixXd {
        Eigen::MatrixXd total = Eigen::MatrixXd::Zero(d_s, d_s);
        switch (rule) {
            case GainRule::PerController:
                for (int i = 0; i < p.n_controllers(); ++i)
                    total +=
                        coupling_term(g, memory_gain(sig, i, p.partition), p.B[i], p.R[i]);
                break;
            case GainRule::Joint: {
                const Eigen::MatrixXd k = joint_memory_gain(sig, p.partition);
                for (int i = 0; i < p.n_controllers(); ++i)
                    total += coupling_term(g, k, p.B[i], p.R[i]);
                break;
            }
            case GainRule::FullInformation:
                break;
        }
        return total;
    };

    // Stacked value: rows 0..d_s-1 hold alpha, the last row's first entry beta.
    auto rhs = [&](double t, const Eigen::MatrixXd& y) {
        const Eigen::VectorXd alpha = y.topRows(d_s).col(0);
        const Eigen::MatrixXd g = gain_s.at(t);
        const Eigen::VectorXd mu_t = mu_s.at(t).col(0);
        const Eigen::MatrixXd qc = coupling_sum(g, sigma_s.at(t));

        Eigen::MatrixXd dy = Eigen::MatrixXd::Zero(d_s + 1, 1);
        dy.topRows(d_s).col(0) =
            -((p.A - gram * g).transpose() * alpha - 2.0 * qc * mu_t);
        dy(d_s, 0) = -((g * noise).trace() -
                       0.25 * alpha.dot(gram * alpha) + mu_t.dot(qc * mu_t));
        return dy;
    };

    const MatrixTrajectory stacked =
        integrate_ode(rhs, Eigen::MatrixXd::Zero(d_s + 1, 1), gain.grid(),
                      Direction::Backward);

    AffineValueTerms terms;
    terms.alpha = MatrixTrajectory(gain.grid(), d_s, 1);
    terms.beta = MatrixTrajectory(gain.grid(), 1, 1);
    for (int k = 0; k < stacked.n_nodes(); ++k) {
        terms.alpha.value(k) = stacked.value(k).topRows(d_s);
        terms.beta.value(k)(0, 0) = stacked.value(k)(d_s, 0);
    }
    return terms;
}

double value_function(const MatrixTrajectory& gain, const AffineValueTerms& terms,
                      double t, const Eigen::VectorXd& s) {
    const Eigen::MatrixXd g = gain.sample_at(t);
    const Eigen::VectorXd alpha = terms.alpha.sample_at(t).col(0);
    const double beta = terms.beta.sample_at(t)(0, 0);
    return s.dot(g * s) + alpha.dot(s) + beta;
}

}  // namespace mldsc
