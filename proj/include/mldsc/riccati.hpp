#pragma once

#include <Eigen/Dense>
#include <optional>

#include "mldsc/moments.hpp"
#include "mldsc/problem.hpp"
#include "mldsc/trajectory.hpp"

namespace mldsc {

// Backward gain paths. psi always present; phi (decentralized) or pi
// (joint-memory) depending on which solver produced the bundle. All three
// equal P at t = T exactly.
struct GainTrajectories {
    MatrixTrajectory psi;
    std::optional<MatrixTrajectory> phi;
    std::optional<MatrixTrajectory> pi;
};

// Affine part of the quadratic value w(t,s) = s'G s + alpha's + beta,
// solved backward from alpha(T) = 0, beta(T) = 0.
struct AffineValueTerms {
    MatrixTrajectory alpha;  // d_s x 1
    MatrixTrajectory beta;   // 1 x 1
};

// Standard Riccati flow, backward from Psi(T) = P:
//   -Psi' = Q + A'Psi + Psi A - Psi B R^{-1} B' Psi
MatrixTrajectory solve_riccati(const LqgProblem& p, const TimeGrid& grid);

// Coupling term Q_i = (I - K_i)' Phi B_i R_i^{-1} B_i' Phi (I - K_i):
// the PSD augmentation that prices decentralized estimation.
Eigen::MatrixXd coupling_term(const Eigen::MatrixXd& Phi_t, const Eigen::MatrixXd& K_i,
                              const Eigen::MatrixXd& B_i, const Eigen::MatrixXd& R_ii);

// Decentralized Riccati flow, backward from Phi(T) = P:
//   -Phi' = Q + A'Phi + Phi A - Phi B R^{-1} B' Phi + sum_i Q_i
// with K_i(t) built from the supplied Sigma path. identity_override forces
// K_i = I, collapsing the flow onto the standard Riccati equation.
MatrixTrajectory solve_decentralized_riccati(const LqgProblem& p,
                                             const MatrixTrajectory& Sigma,
                                             bool identity_override = false);

// Joint-memory (partially observable) Riccati flow: same augmentation with
// the joint gain K(t).
MatrixTrajectory solve_po_riccati(const LqgProblem& p, const MatrixTrajectory& Sigma,
                                  bool identity_override = false);

// Affine value terms, backward from zero:
//   -alpha' = (A - B R^{-1} B' G)' alpha - 2 Qc mu
//   -beta'  = tr(G sigma sigma') - 1/4 alpha' B R^{-1} B' alpha + mu' Qc mu
// where G is the supplied gain path and Qc(t) the summed coupling term
// rebuilt from G(t) and the rule's K(t) at every stage (zero under
// FullInformation).
AffineValueTerms solve_affine_terms(const LqgProblem& p, const MatrixTrajectory& gain,
                                    const MatrixTrajectory& mu,
                                    const MatrixTrajectory& Sigma, GainRule rule);

// w(t, s) = s'G(t)s + alpha(t)'s + beta(t) with linearly interpolated
// coefficients.
double value_function(const MatrixTrajectory& gain, const AffineValueTerms& terms,
                      double t, const Eigen::VectorXd& s);

}  // namespace mldsc
