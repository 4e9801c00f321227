#pragma once

#include <Eigen/Dense>
#include <functional>

#include "mldsc/trajectory.hpp"

namespace mldsc {

enum class Direction { Forward, Backward };

using OdeRhs = std::function<Eigen::MatrixXd(double t, const Eigen::MatrixXd& value)>;

// Post-step hook applied to the freshly computed node value (e.g. the
// symmetrization of gain/covariance paths after every step).
using OdeProject = std::function<void(Eigen::MatrixXd& value)>;

// Classic fixed-step RK4 over the grid. Forward: boundary is the value at
// t = 0 and the march runs to T. Backward: boundary is the value at t = T
// and the march runs to 0 (negative step). Throws IntegrationError when a
// non-finite value appears, reporting the node.
MatrixTrajectory integrate_ode(const OdeRhs& rhs, const Eigen::MatrixXd& boundary,
                               const TimeGrid& grid, Direction direction,
                               const OdeProject& project = nullptr);

}  // namespace mldsc
