#pragma once

#include <Eigen/Core>

#include <functional>
#include <utility>

#include "coharm/mesh.hpp"

namespace coharm {

using MatrixObjective =
    std::function<double(const Eigen::MatrixXd&, const Eigen::MatrixXd&)>;

/// Entry-wise central differences (f(x+h) - f(x-h)) / 2h of a scalar
/// objective of two matrices. The independent oracle for jd_gradient.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> finite_diff_gradient(
    const MatrixObjective& objective, const Eigen::MatrixXd& A,
    const Eigen::MatrixXd& B, double h);

/// How far Y deviates from an isometric copy of X (same connectivity):
/// max corner-angle change and max relative vertex-area change.
struct DeformationMeasure {
  double delta_theta = 0.0;  // radians
  double delta = 0.0;        // max |s_bar/s - 1|
};

DeformationMeasure measure_deformation(const TriMesh& X, const TriMesh& Y);

/// Geometric constants of a same-connectivity mesh pair feeding the
/// spectral-norm bound on L_X - L_Y.
struct PerturbationParams {
  double theta0 = 0.0;       // min triangle angle (also via pi - max angle)
  double s0 = 0.0;           // min vertex area sum
  int nu = 0;                // max vertex degree
  double delta_theta = 0.0;
  double delta = 0.0;
  int n = 0;                 // vertex count
  double tau = 0.0;          // spectral gap (when relevant)
  double epsilon = 0.0;      // deformation magnitude
  double r_norm = 0.0;       // ||R||_2 of the perturbation
};

PerturbationParams measure_perturbation_params(const TriMesh& X,
                                               const TriMesh& Y);

/// (6 nu n^{3/2} / (s0 sin^2 theta0)) * (delta_theta + delta).
double laplacian_diff_bound(const PerturbationParams& params);

/// Largest singular value by power iteration on M'M.
double spectral_norm(const Eigen::MatrixXd& M, int max_iters = 200,
                     double tol = 1e-10);

/// Two readings of the first-order coefficient a_ij:
///   AsPrinted:  phi_i' R phi_j / (2 (lambda_j - lambda_i))
///   Classical:  phi_j' R phi_i / (lambda_i - lambda_j)
/// Both are computed by the verification suite; the convergence-order test
/// reports which one tracks a re-decomposition of the perturbed operator.
enum class PerturbationVariant { AsPrinted, Classical };

struct EigPerturbation {
  Eigen::MatrixXd predicted;     // one column per input eigenvector
  double alpha_max = 0.0;        // ||R||_2 / (2 tau)
  double truncation_bound = 0.0; // eps (n - k' - 1) alpha_max, clamped at 0
  double tau = 0.0;              // observed minimal spectral gap
};

/// First-order prediction phi_i + eps sum_{j != i} a_ij phi_j for every
/// column of an (Euclidean-)orthonormal eigenbasis of a symmetric operator
/// perturbed by eps R. Rejects spectra with a gap below tau_min.
EigPerturbation first_order_eig_perturbation(
    const Eigen::MatrixXd& phi, const Eigen::VectorXd& lambda,
    const Eigen::MatrixXd& R, double eps, double tau_min = 1e-8,
    PerturbationVariant variant = PerturbationVariant::AsPrinted);

/// Greedy alignment of computed eigenvectors to reference ones by maximal
/// |inner product|, sign-corrected; returns the aligned copy of `vectors`.
Eigen::MatrixXd align_eigenvectors(const Eigen::MatrixXd& reference,
                                   const Eigen::MatrixXd& vectors);

}  // namespace coharm
