#pragma once

#include <stdexcept>

namespace mldsc {

// Uniform grid on [0, T] with n_steps intervals. Node k sits at k*dt; the
// final node is forced to T exactly so terminal conditions land on the
// horizon bit-exactly.
class TimeGrid {
  public:
    TimeGrid() = default;
    TimeGrid(double horizon, int n_steps) : T_(horizon), n_steps_(n_steps) {
        if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps must be >= 1");
        if (!(horizon > 0.0)) throw std::invalid_argument("TimeGrid: horizon must be positive");
        dt_ = T_ / n_steps_;
    }

    double horizon() const { return T_; }
    int n_steps() const { return n_steps_; }
    int n_nodes() const { return n_steps_ + 1; }
    double dt() const { return dt_; }

    double node(int k) const { return k == n_steps_ ? T_ : k * dt_; }

    bool operator==(const TimeGrid& o) const {
        return T_ == o.T_ && n_steps_ == o.n_steps_;
    }
    bool operator!=(const TimeGrid& o) const { return !(*this == o); }

  private:
    double T_ = 0.0;
    int n_steps_ = 0;
    double dt_ = 0.0;
};

}  // namespace mldsc
