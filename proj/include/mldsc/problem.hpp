#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mldsc {

// Index bookkeeping for the extended state s = (x, z^1, ..., z^N).
class BlockPartition {
  public:
    BlockPartition() = default;
    BlockPartition(int d_x, std::vector<int> d_z);

    int d_x() const { return d_x_; }
    int n_controllers() const { return static_cast<int>(d_z_.size()); }
    const std::vector<int>& d_z() const { return d_z_; }
    int z_dim(int i) const { return d_z_[i]; }
    int z_total() const { return z_total_; }
    int d_s() const { return d_x_ + z_total_; }

    int x_begin() const { return 0; }
    int z_begin(int i) const { return z_begin_[i]; }

    bool operator==(const BlockPartition& o) const {
        return d_x_ == o.d_x_ && d_z_ == o.d_z_;
    }

  private:
    int d_x_ = 0;
    std::vector<int> d_z_;
    std::vector<int> z_begin_;
    int z_total_ = 0;
};

// Extended-state LQG instance with constant coefficients:
//   ds = (A s + sum_i B_i u^i) dt + sigma dw,   s_0 ~ N(mu0, Sigma0)
//   J  = E[ int_0^T (s'Q s + sum_i u^i' R_i u^i) dt + s_T' P s_T ]
// R is stored per controller block, which makes the block-diagonal
// assumption structural.
struct LqgProblem {
    BlockPartition partition;
    Eigen::MatrixXd A;
    std::vector<Eigen::MatrixXd> B;  // B[i]: d_s x d_u[i]
    Eigen::MatrixXd sigma;           // d_s x d_w
    Eigen::MatrixXd Q;
    std::vector<Eigen::MatrixXd> R;  // R[i]: d_u[i] x d_u[i]
    Eigen::MatrixXd P;
    Eigen::VectorXd mu0;
    Eigen::MatrixXd Sigma0;
    double T = 0.0;

    int state_dim() const { return partition.d_s(); }
    int n_controllers() const { return partition.n_controllers(); }
    int control_dim(int i) const { return static_cast<int>(B[i].cols()); }
    int total_control_dim() const;
    int noise_dim() const { return static_cast<int>(sigma.cols()); }

    // sum_i B_i R_i^{-1} B_i^T (the aggregate B R^{-1} B^T of the block form).
    Eigen::MatrixXd control_gram() const;
    // Single-controller term B_i R_i^{-1} B_i^T.
    Eigen::MatrixXd control_gram(int i) const;
};

// Per-controller ingredients of the extended-state assembly:
//   dy^i = (H_i x + sum_j G[j] c^j) dt + gamma_i dnu^i
//   dz^i = v^i dt + kappa_i dy^i
struct ControllerSpec {
    int index = 0;                        // 0-based
    Eigen::MatrixXd B_state;              // d_x x d_u_state
    Eigen::MatrixXd H;                    // d_y x d_x
    std::map<int, Eigen::MatrixXd> G;     // sender j -> d_y x d_c[j]
    Eigen::MatrixXd gamma;                // d_y x d_nu
    Eigen::MatrixXd kappa;                // d_z x d_y
};

struct CostSpec {
    Eigen::MatrixXd Q;               // d_s x d_s
    std::vector<Eigen::MatrixXd> R;  // per controller
    Eigen::MatrixXd P;               // d_s x d_s
};

struct InitialMoments {
    Eigen::VectorXd mu0_x;
    Eigen::MatrixXd Sigma0_x;
    std::vector<Eigen::VectorXd> mu0_z;
    std::vector<Eigen::MatrixXd> Sigma0_z;
    // Full-matrix override of the block-diagonal default.
    std::optional<Eigen::MatrixXd> Sigma0_full;
};

// Builds the extended problem from the component SDEs. Control channels of
// controller i are ordered (state controls, own-memory controls v^i,
// communication controls c^i). Throws AssemblyError on inconsistent
// dimensions or duplicate controller indices.
LqgProblem assemble_extended_problem(const Eigen::MatrixXd& state_A,
                                     const std::vector<Eigen::MatrixXd>& state_B,
                                     const Eigen::MatrixXd& state_sigma,
                                     const std::vector<ControllerSpec>& specs,
                                     const CostSpec& costs, const InitialMoments& init,
                                     double T);

struct ValidationIssue {
    std::string invariant;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> violations;
    bool ok() const { return violations.empty(); }
};

// Checks symmetry, definiteness (PSD within 1e-10 relative for Q, P, Sigma0;
// PD within 1e-12 absolute for each R block), dimension consistency and
// T > 0. Collects every violation instead of stopping at the first.
ValidationReport validate_problem(const LqgProblem& p);

// The two-controller scalar communication experiment:
// d_s = 3, A = [[1,0,0],[1,0,0],[1,0,0]], B_1 = B_2 = I, sigma = I,
// Q = diag(1,0,0), R_1 = R_2 = I, P = 0, mu0 = 0, Sigma0 = I, T = 10.
LqgProblem paper_experiment();

}  // namespace mldsc
