#include "mldsc/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mldsc {

MatrixTrajectory::MatrixTrajectory(const TimeGrid& grid, int rows, int cols)
    : grid_(grid), rows_(rows), cols_(cols),
      values_(grid.n_nodes(), Eigen::MatrixXd::Zero(rows, cols)) {}

MatrixTrajectory MatrixTrajectory::constant(const TimeGrid& grid,
                                            const Eigen::MatrixXd& value) {
    MatrixTrajectory traj(grid, static_cast<int>(value.rows()),
                          static_cast<int>(value.cols()));
    for (auto& v : traj.values_) v = value;
    return traj;
}

Eigen::MatrixXd MatrixTrajectory::sample_at(double t) const {
    const double T = grid_.horizon();
    const double dt = grid_.dt();
    if (t < -1e-12 * T || t > T * (1.0 + 1e-12))
        throw std::out_of_range("sample_at: t outside [0, T]");
    t = std::clamp(t, 0.0, T);

    const double u = t / dt;
    const int k = static_cast<int>(std::lround(u));
    if (k >= 0 && k <= grid_.n_steps() && std::abs(u - k) < 1e-9)
        return values_[k];

    const int lo = std::clamp(static_cast<int>(std::floor(u)), 0, grid_.n_steps() - 1);
    const double w = u - lo;
    return (1.0 - w) * values_[lo] + w * values_[lo + 1];
}

double MatrixTrajectory::max_abs() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, v.cwiseAbs().maxCoeff());
    return m;
}

double MatrixTrajectory::max_asymmetry() const {
    double m = 0.0;
    for (const auto& v : values_)
        m = std::max(m, (v - v.transpose()).cwiseAbs().maxCoeff());
    return m;
}

Eigen::MatrixXd StageSampler::at(double t) const {
    const TimeGrid& g = traj_->grid();
    const double u = std::clamp(t, 0.0, g.horizon()) / g.dt();
    const int n = g.n_steps();

    const int k = static_cast<int>(std::lround(u));
    if (k >= 0 && k <= n && std::abs(u - k) < 1e-9) return traj_->value(k);

    // Cubic Lagrange through the 4 nodes around u (clamped at the ends).
    int base = static_cast<int>(std::floor(u)) - 1;
    base = std::clamp(base, 0, n - 3);
    const double s = u - base;
    const double w0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
    const double w1 = s * (s - 2.0) * (s - 3.0) / 2.0;
    const double w2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
    const double w3 = s * (s - 1.0) * (s - 2.0) / 6.0;
    return w0 * traj_->value(base) + w1 * traj_->value(base + 1) +
           w2 * traj_->value(base + 2) + w3 * traj_->value(base + 3);
}

void write_csv(const MatrixTrajectory& traj, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);

    out << "t";
    for (int r = 0; r < traj.rows(); ++r)
        for (int c = 0; c < traj.cols(); ++c) out << ",m_" << r << "_" << c;
    out << "\n";

    char buf[40];
    for (int k = 0; k < traj.n_nodes(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g", traj.grid().node(k));
        out << buf;
        const Eigen::MatrixXd& v = traj.value(k);
        for (int r = 0; r < traj.rows(); ++r)
            for (int c = 0; c < traj.cols(); ++c) {
                std::snprintf(buf, sizeof(buf), "%.17g", v(r, c));
                out << "," << buf;
            }
        out << "\n";
    }
}

MatrixTrajectory read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);

    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("read_csv: empty file");

    int rows = 0, cols = 0;
    {
        std::stringstream ss(header);
        std::string tok;
        std::getline(ss, tok, ',');  // "t"
        while (std::getline(ss, tok, ',')) {
            int r, c;
            if (std::sscanf(tok.c_str(), "m_%d_%d", &r, &c) != 2)
                throw std::runtime_error("read_csv: bad header token " + tok);
            rows = std::max(rows, r + 1);
            cols = std::max(cols, c + 1);
        }
    }

    std::vector<double> times;
    std::vector<Eigen::MatrixXd> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        std::getline(ss, tok, ',');
        times.push_back(std::stod(tok));
        Eigen::MatrixXd v(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                if (!std::getline(ss, tok, ','))
                    throw std::runtime_error("read_csv: short row");
                v(r, c) = std::stod(tok);
            }
        values.push_back(std::move(v));
    }
    if (times.size() < 2) throw std::runtime_error("read_csv: need at least two nodes");

    TimeGrid grid(times.back(), static_cast<int>(times.size()) - 1);
    MatrixTrajectory traj(grid, rows, cols);
    for (int k = 0; k < traj.n_nodes(); ++k) traj.value(k) = values[k];
    return traj;
}

}  // namespace mldsc
