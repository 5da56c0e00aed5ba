#pragma once

#include <Eigen/Core>

#include "coharm/laplacian.hpp"

namespace coharm {

/// First k' generalized eigenpairs of W phi = lambda D phi, columns
/// D-orthonormal, eigenvalues ascending, signs normalized so the entry of
/// largest magnitude in each column is positive.
struct EigenBasis {
  Eigen::MatrixXd phi;      // n x k'
  Eigen::VectorXd lambda;   // k', ascending
  Eigen::VectorXd mass;     // the D diagonal the basis is orthonormal under
  double residual = 0.0;    // achieved ||W phi - D phi diag(lambda)||_F

  int size() const { return static_cast<int>(phi.cols()); }
};

struct EigenOptions {
  // Dense solve below this size (or when many pairs are requested);
  // shift-invert Lanczos above.
  int dense_threshold = 1500;
  double tol = 1e-9;
  int max_lanczos_steps = 0;  // 0 -> derived from k'
};

EigenBasis eigenbasis(const LaplacianPair& lap, int k_prime,
                      const EigenOptions& opts = {});

/// Analysis: a_i = phi_i' D f. Columns of a matrix argument are treated as
/// independent functions.
Eigen::VectorXd fourier_coeffs(const EigenBasis& basis, const Eigen::VectorXd& f);
Eigen::MatrixXd fourier_coeffs(const EigenBasis& basis, const Eigen::MatrixXd& fs);

/// Synthesis: f = sum_i a_i phi_i.
Eigen::VectorXd synthesize(const EigenBasis& basis, const Eigen::VectorXd& coeffs);
Eigen::MatrixXd synthesize(const EigenBasis& basis, const Eigen::MatrixXd& coeffs);

/// Diagonal/off-diagonal mass of a square matrix. ratio = offdiag/diag
/// (small = closer to diagonal); 0 when the off-diagonal part vanishes,
/// +inf when the diagonal vanishes but the off-diagonal does not.
struct OffDiagNorms {
  double diag_norm = 0.0;
  double offdiag_norm = 0.0;
  double ratio = 0.0;
};

OffDiagNorms off_norms(const Eigen::MatrixXd& M);

/// Deterministic sign convention: flip each column so its entry of largest
/// magnitude is positive (ties broken by lowest row index).
void sign_normalize_columns(Eigen::MatrixXd& M);

}  // namespace coharm
