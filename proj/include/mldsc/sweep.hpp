#pragma once

#include <memory>
#include <vector>

#include "mldsc/moments.hpp"
#include "mldsc/riccati.hpp"

namespace mldsc {

enum class InitMode {
    PsiInit,       // warm start Phi^0 = Psi
    TerminalInit,  // Phi^0 constant equal to P
};

struct SweepOptions {
    int n_steps = 10000;
    int max_iters = 200;
    double tol = 1e-8;
    double damping = 1.0;  // relaxation weight on the fresh Sigma, in (0, 1]
    InitMode init_mode = InitMode::PsiInit;
    bool identity_override = false;  // test hook: K = I everywhere
};

struct SweepReport {
    int iterations = 0;
    std::vector<double> residual_history;
    bool converged = false;
    // Min eigenvalue over all nodes of the backward gain / Sigma, per iteration.
    std::vector<double> gain_min_eig;
    std::vector<double> sigma_min_eig;
};

struct Solution {
    std::shared_ptr<const LqgProblem> problem;
    TimeGrid grid;
    GainTrajectories gains;
    AffineValueTerms affine;
    MomentTrajectory moments;
    GainRule gain_rule = GainRule::PerController;
    SweepReport report;
};

// Forward-backward sweep for the decentralized problem: alternates the
// forward moment pass (mu, Sigma under Phi^k) with the backward decentralized
// Riccati pass (Phi^{k+1} from Sigma^k) until the relative sup-norm residual
// on Phi drops below tol. Psi is solved once up front; alpha, beta from the
// converged gains. Non-convergence is reported, not thrown.
Solution solve_mldsc(const LqgProblem& p, const SweepOptions& opts = {});

// Identical pipeline under the joint-memory gain, producing Pi.
Solution solve_mlposc(const LqgProblem& p, const SweepOptions& opts = {});

// max over nodes of |next - prev|_max / (1 + |prev|_max).
double residual(const MatrixTrajectory& prev, const MatrixTrajectory& next);

}  // namespace mldsc
