// Forward-backward sweep: alternate the forward moment pass (mu, Sigma under
// the current backward gain) with the backward augmented Riccati pass until
// the gain path stops moving. The coupling runs only through the control
// law, so the undamped iteration converges for this problem class; damping
// is kept as a fallback for ill-conditioned user problems.

#include "mldsc/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "mldsc/linalg.hpp"

namespace mldsc {

double residual(const MatrixTrajectory& prev, const MatrixTrajectory& next) {
    if (prev.grid() != next.grid() || prev.rows() != next.rows() ||
        prev.cols() != next.cols())
        throw std::invalid_argument("residual: trajectory shape mismatch");
    double worst = 0.0;
    for (int k = 0; k < prev.n_nodes(); ++k) {
        const double diff = (next.value(k) - prev.value(k)).cwiseAbs().maxCoeff();
        const double scale = 1.0 + prev.value(k).cwiseAbs().maxCoeff();
        worst = std::max(worst, diff / scale);
    }
    return worst;
}

namespace {

double min_eig_over_nodes(const MatrixTrajectory& traj) {
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < traj.n_nodes(); ++k)
        worst = std::min(worst, min_eigenvalue(traj.value(k)));
    return worst;
}

Solution sweep(const LqgProblem& p, const SweepOptions& opts, GainRule natural_rule) {
    if (!(opts.damping > 0.0 && opts.damping <= 1.0))
        throw std::invalid_argument("sweep: damping must be in (0, 1]");
    if (opts.max_iters < 1) throw std::invalid_argument("sweep: max_iters must be >= 1");
    if (!(opts.tol > 0.0)) throw std::invalid_argument("sweep: tol must be positive");

    const GainRule rule =
        opts.identity_override ? GainRule::FullInformation : natural_rule;
    const TimeGrid grid(p.T, opts.n_steps);

    Solution sol;
    sol.problem = std::make_shared<const LqgProblem>(p);
    sol.grid = grid;
    sol.gain_rule = rule;
    sol.gains.psi = solve_riccati(p, grid);

    MatrixTrajectory gain = opts.init_mode == InitMode::PsiInit
                                ? sol.gains.psi
                                : MatrixTrajectory::constant(grid, p.P);

    auto backward = [&](const MatrixTrajectory& sigma) {
        return natural_rule == GainRule::Joint
                   ? solve_po_riccati(p, sigma, opts.identity_override)
                   : solve_decentralized_riccati(p, sigma, opts.identity_override);
    };

    MomentTrajectory moments;
    MatrixTrajectory prev_sigma;
    SweepReport& report = sol.report;

    for (int iter = 1; iter <= opts.max_iters; ++iter) {
        moments = propagate_moments(p, sol.gains.psi, gain, rule);

        MatrixTrajectory sigma = moments.Sigma;
        if (opts.damping < 1.0 && iter > 1) {
            for (int k = 0; k < sigma.n_nodes(); ++k)
                sigma.value(k) = opts.damping * sigma.value(k) +
                                 (1.0 - opts.damping) * prev_sigma.value(k);
        }
        prev_sigma = sigma;

        MatrixTrajectory next = backward(sigma);
        const double res = residual(gain, next);
        report.residual_history.push_back(res);
        report.gain_min_eig.push_back(min_eig_over_nodes(next));
        report.sigma_min_eig.push_back(min_eig_over_nodes(sigma));
        report.iterations = iter;
        gain = std::move(next);

        if (res <= opts.tol) {
            report.converged = true;
            break;
        }
    }

    // Final forward pass so the stored moments match the converged gain.
    sol.moments = propagate_moments(p, sol.gains.psi, gain, rule);
    sol.affine = solve_affine_terms(p, gain, sol.moments.mu, sol.moments.Sigma, rule);
    if (natural_rule == GainRule::Joint)
        sol.gains.pi = std::move(gain);
    else
        sol.gains.phi = std::move(gain);
    return sol;
}

}  // namespace

Solution solve_mldsc(const LqgProblem& p, const SweepOptions& opts) {
    return sweep(p, opts, GainRule::PerController);
}

Solution solve_mlposc(const LqgProblem& p, const SweepOptions& opts) {
    return sweep(p, opts, GainRule::Joint);
}

}  // namespace mldsc
