#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "mldsc/time_grid.hpp"

namespace mldsc {

// Time-indexed matrix path on a uniform grid: one fixed-shape value per node.
class MatrixTrajectory {
  public:
    MatrixTrajectory() = default;
    MatrixTrajectory(const TimeGrid& grid, int rows, int cols);

    static MatrixTrajectory constant(const TimeGrid& grid, const Eigen::MatrixXd& value);

    const TimeGrid& grid() const { return grid_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int n_nodes() const { return static_cast<int>(values_.size()); }

    Eigen::MatrixXd& value(int k) { return values_[k]; }
    const Eigen::MatrixXd& value(int k) const { return values_[k]; }

    // Linear interpolation between bracketing nodes; exact at nodes.
    // Throws std::out_of_range for t outside [0, T].
    Eigen::MatrixXd sample_at(double t) const;

    // Largest absolute entry over all nodes.
    double max_abs() const;

    // Largest |M - M^T| entry over all nodes (0 for perfectly symmetric paths).
    double max_asymmetry() const;

  private:
    TimeGrid grid_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Eigen::MatrixXd> values_;
};

// Stage-time sampler used inside the coupled ODE solvers. RK4 stages hit
// nodes and half-nodes of the shared grid; node hits return stored values,
// half-node hits use 4-point cubic interpolation so the cross-coupling does
// not cap the integrator order. Not a substitute for the linear sample_at,
// which remains the policy-facing interpolation.
class StageSampler {
  public:
    explicit StageSampler(const MatrixTrajectory& traj) : traj_(&traj) {}
    Eigen::MatrixXd at(double t) const;

  private:
    const MatrixTrajectory* traj_;
};

// CSV: header "t,m_0_0,m_0_1,..." (row-major entries), one row per node,
// 17 significant digits.
void write_csv(const MatrixTrajectory& traj, const std::string& path);
MatrixTrajectory read_csv(const std::string& path);

}  // namespace mldsc
