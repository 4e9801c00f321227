#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "mldsc/kernels.hpp"
#include "mldsc/policy.hpp"

namespace mldsc {

struct SimConfig {
    int n_samples = 10000;
    double sim_dt = 0.0;  // 0: use the policy grid dt; must divide T within 1e-12
    uint64_t seed = 0;
    int parallel_width = 0;  // worker hint; 0 = hardware concurrency
    uint64_t stream_domain = 0;  // separates noise between policies in a comparison
    int path_stride = 0;  // record every path_stride-th node (0: no recording)
    kernels::KernelChoice kernel = kernels::KernelChoice::Auto;
};

struct PathBatch {
    SimConfig config;
    std::vector<double> costs;        // realized cumulative cost per sample
    std::vector<uint8_t> diverged;    // per-sample non-finite flag
    std::vector<double> record_times;
    std::vector<Eigen::MatrixXd> states;  // per recorded time: d_s x n_samples

    int n_diverged() const;
};

// Euler-Maruyama under the policy's affine law, left-endpoint cost
// quadrature, Philox substreams per (seed, domain, sample). Output is
// bit-identical for any parallel_width and for scalar vs SIMD kernels.
PathBatch simulate_paths(const LqgProblem& p, const Policy& pol, const SimConfig& cfg);

struct CostEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(n)
    int n = 0;
    int diverged = 0;
};

// Mean and standard error over non-diverged samples, accumulated in sample
// order. Throws EstimationError when nothing survived.
CostEstimate estimate_cost(const PathBatch& batch);

// E[w(0, s_0)] = tr(G(0) Sigma0) + mu0'G(0)mu0 + alpha(0)'mu0 + beta(0)
// for the solution's gain G (Phi or Pi).
double analytic_optimal_cost(const Solution& sol);

}  // namespace mldsc
