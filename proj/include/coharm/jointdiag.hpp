#pragma once

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

#include "coharm/spectrum.hpp"

namespace coharm {

enum class Penalty {
  OffSquares,      // sum of squared off-diagonal elements of A' Lam A
  DiagDifference,  // ||A' Lam A - Lam_{1:k}||_F^2 (keeps columns ordered)
};

/// Point correspondences (x_j, y_j') driving the coupling term, with
/// coupling strength mu and per-frequency weights.
struct CouplingSpec {
  std::vector<std::pair<int, int>> pairs;
  double mu = -1.0;          // < 0 -> adaptive (see effective_mu)
  Eigen::VectorXd weights;   // size k; empty -> uniform
};

/// One coupled-diagonalization instance: truncated eigenbases of the two
/// shapes, the coupling data, and the number k of coupled functions sought
/// (k <= k' = columns of phi/psi).
struct JdProblem {
  Eigen::MatrixXd phi;        // n_X x k'
  Eigen::MatrixXd psi;        // n_Y x k'
  Eigen::VectorXd lambda_x;   // k'
  Eigen::VectorXd lambda_y;   // k'
  CouplingSpec coupling;
  int k = 20;
  Penalty penalty = Penalty::DiagDifference;

  int k_prime() const { return static_cast<int>(phi.cols()); }
};

/// Validates dimensions/indices and collects non-fatal warnings (e.g. the
/// over-determination condition 2k' <= l).
JdProblem make_jd_problem(const EigenBasis& basis_x, const EigenBasis& basis_y,
                          CouplingSpec coupling, int k,
                          Penalty penalty = Penalty::DiagDifference,
                          std::vector<std::string>* warnings = nullptr);

/// Row-selector matrices: P (l x nX) with p_{i, j_i} = 1, Q (l x nY) with
/// q_{i, j'_i} = 1.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> coupling_matrices(
    const CouplingSpec& spec, int n_x, int n_y);

/// Uniform weights v_i = 1, and the optional decay v_i = 1/(1 + mean
/// eigenvalue) used for frequency-dependent coupling.
Eigen::VectorXd uniform_weights(int k);
Eigen::VectorXd decay_weights(const Eigen::VectorXd& lambda_x,
                              const Eigen::VectorXd& lambda_y, int k);

/// mu actually used: the spec'd value when >= 0, otherwise the scale of the
/// truncated spectra divided by the coupling term at the sign-flip init
/// (1 when that term vanishes).
double effective_mu(const JdProblem& prob);

double jd_objective(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                    const JdProblem& prob);

/// Euclidean gradient of jd_objective w.r.t. (A, B). Verified against
/// central finite differences in the analysis suite.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> jd_gradient(
    const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, const JdProblem& prob);

/// A0 = [I; 0]; B0 diagonal +-1 (zero-padded) with the sign of b_ii chosen
/// by comparing ||P phi_i -+ Q psi_i|| at the coupled points.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> init_sign_flip(const JdProblem& prob);

struct SolveOptions {
  int max_iters = 1000;
  double tol = 1e-9;    // stop when relative objective decrease falls below
  double step = 1.0;    // initial trial step of the backtracking search
};

struct CoupledBases {
  Eigen::MatrixXd A;          // k' x k, A'A = I
  Eigen::MatrixXd B;          // k' x k, B'B = I
  Eigen::MatrixXd phi_hat;    // n_X x k
  Eigen::MatrixXd psi_hat;    // n_Y x k
  std::vector<double> objective_trace;   // nonincreasing
  std::vector<double> band_objectives;   // final objective per band (banded)
  bool converged = true;
  double mu_used = 0.0;
  std::vector<std::string> warnings;
};

/// Projected gradient on the product of Stiefel manifolds: tangent
/// projection, QR retraction, Armijo backtracking. Columns of the solution
/// are reordered by ascending Rayleigh quotient diag(A' Lam_X A).
CoupledBases solve_jd(const JdProblem& prob, const SolveOptions& opts = {});

/// Split the first k columns into k/band independent bands and solve each
/// as its own square (k = k' = band) problem. Requires band > l and
/// k % band == 0.
CoupledBases solve_jd_banded(const JdProblem& prob, int band,
                             const SolveOptions& opts = {});

/// mu -> inf limit: minimize the coupling term alone over orthogonal
/// (A, B) via the orthogonal Procrustes solution. Requires k = k'.
struct ProcrustesCoupling {
  Eigen::MatrixXd A;      // = S of the SVD of phi' P' Q psi
  Eigen::MatrixXd B;      // = R
  Eigen::MatrixXd Omega;  // = S R'
  std::vector<std::string> warnings;
};

ProcrustesCoupling procrustes_couple(const JdProblem& prob);

}  // namespace coharm
