#include "mldsc/problem.hpp"

#include <Eigen/Eigenvalues>
#include <set>
#include <sstream>

#include "mldsc/errors.hpp"
#include "mldsc/linalg.hpp"

namespace mldsc {

BlockPartition::BlockPartition(int d_x, std::vector<int> d_z)
    : d_x_(d_x), d_z_(std::move(d_z)) {
    if (d_x_ < 1) throw std::invalid_argument("BlockPartition: d_x must be >= 1");
    if (d_z_.empty()) throw std::invalid_argument("BlockPartition: need N >= 1 memories");
    z_begin_.reserve(d_z_.size());
    int offset = d_x_;
    for (int dz : d_z_) {
        if (dz < 1) throw std::invalid_argument("BlockPartition: d_z entries must be >= 1");
        z_begin_.push_back(offset);
        offset += dz;
    }
    z_total_ = offset - d_x_;
}

int LqgProblem::total_control_dim() const {
    int total = 0;
    for (const auto& b : B) total += static_cast<int>(b.cols());
    return total;
}

Eigen::MatrixXd LqgProblem::control_gram(int i) const {
    return B[i] * spd_solve(R[i], B[i].transpose(), "R block " + std::to_string(i));
}

Eigen::MatrixXd LqgProblem::control_gram() const {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(state_dim(), state_dim());
    for (int i = 0; i < n_controllers(); ++i) g += control_gram(i);
    return g;
}

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw AssemblyError("assemble: " + what);
}

std::string shape(const Eigen::MatrixXd& m) {
    std::ostringstream ss;
    ss << m.rows() << "x" << m.cols();
    return ss.str();
}

}  // namespace

LqgProblem assemble_extended_problem(const Eigen::MatrixXd& state_A,
                                     const std::vector<Eigen::MatrixXd>& state_B,
                                     const Eigen::MatrixXd& state_sigma,
                                     const std::vector<ControllerSpec>& specs,
                                     const CostSpec& costs, const InitialMoments& init,
                                     double T) {
    const int N = static_cast<int>(specs.size());
    require(N >= 1, "need at least one controller");
    const int d_x = static_cast<int>(state_A.rows());
    require(state_A.cols() == d_x, "state_A must be square, got " + shape(state_A));
    require(static_cast<int>(state_B.size()) == N, "state_B count != controller count");
    require(state_sigma.rows() == d_x, "state_sigma rows != d_x");

    std::set<int> seen;
    for (const auto& spec : specs) {
        require(seen.insert(spec.index).second,
                "duplicate controller index " + std::to_string(spec.index));
        require(spec.index >= 0 && spec.index < N,
                "controller index " + std::to_string(spec.index) + " out of range");
    }

    // Specs indexed by controller.
    std::vector<const ControllerSpec*> by_index(N);
    for (const auto& spec : specs) by_index[spec.index] = &spec;

    std::vector<int> d_z(N), d_y(N);
    for (int i = 0; i < N; ++i) {
        const ControllerSpec& s = *by_index[i];
        d_y[i] = static_cast<int>(s.H.rows());
        d_z[i] = static_cast<int>(s.kappa.rows());
        require(s.H.cols() == d_x,
                "controller " + std::to_string(i) + ": H is " + shape(s.H) +
                    " but d_x = " + std::to_string(d_x));
        require(s.kappa.cols() == d_y[i],
                "controller " + std::to_string(i) + ": kappa is " + shape(s.kappa) +
                    " but d_y = " + std::to_string(d_y[i]));
        require(s.gamma.rows() == d_y[i],
                "controller " + std::to_string(i) + ": gamma is " + shape(s.gamma) +
                    " but d_y = " + std::to_string(d_y[i]));
        require(state_B[i].rows() == d_x,
                "controller " + std::to_string(i) + ": state_B is " +
                    shape(state_B[i]) + " but d_x = " + std::to_string(d_x));
    }

    // Communication channel width of sender j: consistent across receivers.
    std::vector<int> d_c(N, 0);
    for (int i = 0; i < N; ++i) {
        for (const auto& [j, g] : by_index[i]->G) {
            require(j >= 0 && j < N && j != i,
                    "controller " + std::to_string(i) + ": bad comm sender index " +
                        std::to_string(j));
            require(g.rows() == d_y[i],
                    "controller " + std::to_string(i) + ": G from " + std::to_string(j) +
                        " is " + shape(g) + " but d_y = " + std::to_string(d_y[i]));
            const int width = static_cast<int>(g.cols());
            require(d_c[j] == 0 || d_c[j] == width,
                    "inconsistent comm width for sender " + std::to_string(j));
            d_c[j] = width;
        }
    }

    BlockPartition partition(d_x, d_z);
    const int d_s = partition.d_s();

    LqgProblem p;
    p.partition = partition;
    p.T = T;

    // Drift: state dynamics in the x block, kappa_i H_i in each (z^i, x) block.
    p.A = Eigen::MatrixXd::Zero(d_s, d_s);
    p.A.topLeftCorner(d_x, d_x) = state_A;
    for (int i = 0; i < N; ++i)
        p.A.block(partition.z_begin(i), 0, d_z[i], d_x) = by_index[i]->kappa * by_index[i]->H;

    // Control channels of controller i: (state, own-memory v^i, comm c^i).
    p.B.resize(N);
    for (int i = 0; i < N; ++i) {
        const int du = static_cast<int>(state_B[i].cols()) + d_z[i] + d_c[i];
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(d_s, du);
        int col = 0;
        b.block(0, col, d_x, state_B[i].cols()) = state_B[i];
        col += static_cast<int>(state_B[i].cols());
        b.block(partition.z_begin(i), col, d_z[i], d_z[i]) =
            Eigen::MatrixXd::Identity(d_z[i], d_z[i]);
        col += d_z[i];
        if (d_c[i] > 0) {
            for (int j = 0; j < N; ++j) {
                auto it = by_index[j]->G.find(i);
                if (it == by_index[j]->G.end()) continue;
                b.block(partition.z_begin(j), col, d_z[j], d_c[i]) =
                    by_index[j]->kappa * it->second;
            }
        }
        p.B[i] = std::move(b);
    }

    // Diffusion: block diagonal over the independent noises (w, nu^1, ..., nu^N).
    int d_w = static_cast<int>(state_sigma.cols());
    for (int i = 0; i < N; ++i) d_w += static_cast<int>(by_index[i]->gamma.cols());
    p.sigma = Eigen::MatrixXd::Zero(d_s, d_w);
    p.sigma.topLeftCorner(d_x, state_sigma.cols()) = state_sigma;
    int noise_col = static_cast<int>(state_sigma.cols());
    for (int i = 0; i < N; ++i) {
        const auto& g = by_index[i]->gamma;
        p.sigma.block(partition.z_begin(i), noise_col, d_z[i], g.cols()) =
            by_index[i]->kappa * g;
        noise_col += static_cast<int>(g.cols());
    }

    require(costs.Q.rows() == d_s && costs.Q.cols() == d_s,
            "Q is " + shape(costs.Q) + " but d_s = " + std::to_string(d_s));
    require(costs.P.rows() == d_s && costs.P.cols() == d_s,
            "P is " + shape(costs.P) + " but d_s = " + std::to_string(d_s));
    require(static_cast<int>(costs.R.size()) == N, "R block count != controller count");
    for (int i = 0; i < N; ++i) {
        const int du = static_cast<int>(p.B[i].cols());
        require(costs.R[i].rows() == du && costs.R[i].cols() == du,
                "R block " + std::to_string(i) + " is " + shape(costs.R[i]) +
                    " but controller " + std::to_string(i) + " has " +
                    std::to_string(du) + " control channels");
    }
    p.Q = costs.Q;
    p.R = costs.R;
    p.P = costs.P;

    require(init.mu0_x.size() == d_x, "mu0_x size != d_x");
    require(init.Sigma0_x.rows() == d_x && init.Sigma0_x.cols() == d_x,
            "Sigma0_x is " + shape(init.Sigma0_x));
    require(static_cast<int>(init.mu0_z.size()) == N, "mu0_z count != controller count");
    require(static_cast<int>(init.Sigma0_z.size()) == N,
            "Sigma0_z count != controller count");

    p.mu0 = Eigen::VectorXd::Zero(d_s);
    p.mu0.head(d_x) = init.mu0_x;
    for (int i = 0; i < N; ++i) {
        require(init.mu0_z[i].size() == d_z[i],
                "mu0_z[" + std::to_string(i) + "] size != d_z");
        p.mu0.segment(partition.z_begin(i), d_z[i]) = init.mu0_z[i];
    }

    if (init.Sigma0_full) {
        require(init.Sigma0_full->rows() == d_s && init.Sigma0_full->cols() == d_s,
                "Sigma0 override is " + shape(*init.Sigma0_full));
        p.Sigma0 = *init.Sigma0_full;
    } else {
        p.Sigma0 = Eigen::MatrixXd::Zero(d_s, d_s);
        p.Sigma0.topLeftCorner(d_x, d_x) = init.Sigma0_x;
        for (int i = 0; i < N; ++i) {
            require(init.Sigma0_z[i].rows() == d_z[i] && init.Sigma0_z[i].cols() == d_z[i],
                    "Sigma0_z[" + std::to_string(i) + "] is " + shape(init.Sigma0_z[i]));
            p.Sigma0.block(partition.z_begin(i), partition.z_begin(i), d_z[i], d_z[i]) =
                init.Sigma0_z[i];
        }
    }
    return p;
}

namespace {

void check_symmetric_definite(const Eigen::MatrixXd& m, const std::string& name,
                              bool require_pd, ValidationReport& report) {
    if (m.rows() != m.cols()) {
        report.violations.push_back({name + " square", name + " is not square"});
        return;
    }
    const double scale = m.cwiseAbs().maxCoeff();
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(scale, 1.0)) {
        std::ostringstream ss;
        ss << name << " asymmetry " << asym;
        report.violations.push_back({name + " symmetric", ss.str()});
        return;
    }
    const double min_eig = min_eigenvalue(symmetrize(m));
    if (require_pd) {
        if (min_eig < 1e-12) {
            std::ostringstream ss;
            ss << name << " min eigenvalue " << min_eig;
            report.violations.push_back({name + " positive definite", ss.str()});
        }
    } else {
        const double max_abs = max_abs_eigenvalue(symmetrize(m));
        if (min_eig < -1e-10 * std::max(max_abs, 1e-300)) {
            std::ostringstream ss;
            ss << name << " min eigenvalue " << min_eig;
            report.violations.push_back({name + " positive semidefinite", ss.str()});
        }
    }
}

}  // namespace

ValidationReport validate_problem(const LqgProblem& p) {
    ValidationReport report;
    const int d_s = p.state_dim();
    const int N = p.n_controllers();

    auto dims = [&](bool cond, const std::string& detail) {
        if (!cond) report.violations.push_back({"dimension consistency", detail});
    };

    dims(p.A.rows() == d_s && p.A.cols() == d_s, "A is not d_s x d_s");
    dims(static_cast<int>(p.B.size()) == N, "B block count != N");
    dims(static_cast<int>(p.R.size()) == N, "R block count != N");
    for (int i = 0; i < N && i < static_cast<int>(p.B.size()); ++i)
        dims(p.B[i].rows() == d_s, "B block " + std::to_string(i) + " row mismatch");
    for (int i = 0; i < N && i < static_cast<int>(p.B.size()) &&
                    i < static_cast<int>(p.R.size());
         ++i)
        dims(p.R[i].rows() == p.B[i].cols() && p.R[i].cols() == p.B[i].cols(),
             "R block " + std::to_string(i) + " does not match B block columns");
    dims(p.sigma.rows() == d_s, "sigma row mismatch");
    dims(p.Q.rows() == d_s && p.Q.cols() == d_s, "Q is not d_s x d_s");
    dims(p.P.rows() == d_s && p.P.cols() == d_s, "P is not d_s x d_s");
    dims(p.mu0.size() == d_s, "mu0 size mismatch");
    dims(p.Sigma0.rows() == d_s && p.Sigma0.cols() == d_s, "Sigma0 is not d_s x d_s");

    if (!(p.T > 0.0))
        report.violations.push_back({"T > 0", "horizon T = " + std::to_string(p.T)});

    if (p.Q.rows() == d_s && p.Q.cols() == d_s)
        check_symmetric_definite(p.Q, "Q", false, report);
    if (p.P.rows() == d_s && p.P.cols() == d_s)
        check_symmetric_definite(p.P, "P", false, report);
    if (p.Sigma0.rows() == d_s && p.Sigma0.cols() == d_s)
        check_symmetric_definite(p.Sigma0, "Sigma0", false, report);
    for (int i = 0; i < static_cast<int>(p.R.size()); ++i)
        check_symmetric_definite(p.R[i], "R block " + std::to_string(i), true, report);

    return report;
}

LqgProblem paper_experiment() {
    LqgProblem p;
    p.partition = BlockPartition(1, {1, 1});
    p.A = Eigen::MatrixXd::Zero(3, 3);
    p.A.col(0).setOnes();
    p.B = {Eigen::MatrixXd::Identity(3, 3), Eigen::MatrixXd::Identity(3, 3)};
    p.sigma = Eigen::MatrixXd::Identity(3, 3);
    p.Q = Eigen::MatrixXd::Zero(3, 3);
    p.Q(0, 0) = 1.0;
    p.R = {Eigen::MatrixXd::Identity(3, 3), Eigen::MatrixXd::Identity(3, 3)};
    p.P = Eigen::MatrixXd::Zero(3, 3);
    p.mu0 = Eigen::VectorXd::Zero(3);
    p.Sigma0 = Eigen::MatrixXd::Identity(3, 3);
    p.T = 10.0;
    return p;
}

}  // namespace mldsc
