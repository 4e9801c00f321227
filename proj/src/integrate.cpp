#include "mldsc/integrate.hpp"

#include <string>

#include "mldsc/errors.hpp"

namespace mldsc {

namespace {

Eigen::MatrixXd rk4_step(const OdeRhs& rhs, double t, double h,
                         const Eigen::MatrixXd& y) {
    const Eigen::MatrixXd k1 = rhs(t, y);
    const Eigen::MatrixXd k2 = rhs(t + 0.5 * h, y + (0.5 * h) * k1);
    const Eigen::MatrixXd k3 = rhs(t + 0.5 * h, y + (0.5 * h) * k2);
    const Eigen::MatrixXd k4 = rhs(t + h, y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

MatrixTrajectory integrate_ode(const OdeRhs& rhs, const Eigen::MatrixXd& boundary,
                               const TimeGrid& grid, Direction direction,
                               const OdeProject& project) {
    MatrixTrajectory traj(grid, static_cast<int>(boundary.rows()),
                          static_cast<int>(boundary.cols()));
    const int n = grid.n_steps();
    const double dt = grid.dt();

    if (direction == Direction::Forward) {
        traj.value(0) = boundary;
        for (int k = 0; k < n; ++k) {
            Eigen::MatrixXd next = rk4_step(rhs, grid.node(k), dt, traj.value(k));
            if (!next.allFinite())
                throw IntegrationError("integrate_ode: non-finite value at node " +
                                       std::to_string(k + 1) + " (t = " +
                                       std::to_string(grid.node(k + 1)) + ")");
            if (project) project(next);
            traj.value(k + 1) = std::move(next);
        }
    } else {
        traj.value(n) = boundary;
        for (int k = n; k > 0; --k) {
            Eigen::MatrixXd next = rk4_step(rhs, grid.node(k), -dt, traj.value(k));
            if (!next.allFinite())
                throw IntegrationError("integrate_ode: non-finite value at node " +
                                       std::to_string(k - 1) + " (t = " +
                                       std::to_string(grid.node(k - 1)) + ")");
            if (project) project(next);
            traj.value(k - 1) = std::move(next);
        }
    }
    return traj;
}

}  // namespace mldsc
