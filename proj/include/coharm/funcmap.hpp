#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace coharm {

/// Paired constraint functions: column r of F (on X) corresponds to column
/// r of G (on Y).
struct FunctionConstraints {
  Eigen::MatrixXd F;  // n_X x p
  Eigen::MatrixXd G;  // n_Y x p
};

/// A basis to take Fourier coefficients in: D-orthonormal columns plus the
/// lumped masses defining the inner product. Works for both Laplacian and
/// coupled bases.
struct SpectralBasis {
  Eigen::MatrixXd vecs;   // n x (>= k)
  Eigen::VectorXd mass;   // n
};

/// k x k functional matrix C, fitted so that the Y-side coefficient rows
/// times C reproduce the X-side coefficient rows (mass-weighted inner
/// products). Diagonal mode stores only the k diagonal values.
struct FunctionalMap {
  Eigen::MatrixXd C;          // k x k (zero off-diagonal in diagonal mode)
  bool diagonal = false;
  std::string basis_tag;      // "laplacian" or "coupled"
  double residual = 0.0;      // Frobenius residual of the fitted system
  std::vector<std::string> warnings;

  int k() const { return static_cast<int>(C.rows()); }
};

/// Least-squares solution of (G' D_Y Psi) C = F' D_X Phi, a pk x k^2
/// system. Rank-deficient designs fall back to the minimum-norm solution
/// with a warning; pk < k^2 is warned about as under-determined.
FunctionalMap fit_full(const FunctionConstraints& cons,
                       const SpectralBasis& basis_x,
                       const SpectralBasis& basis_y, int k,
                       const std::string& basis_tag = "laplacian");

/// Diagonal-only variant: pk equations in the k diagonal entries,
/// c_jj = sum_r a_j^r b_j^r / sum_r (b_j^r)^2. An all-zero design column
/// leaves c_jj = 0 with a warning.
FunctionalMap fit_diag(const FunctionConstraints& cons,
                       const SpectralBasis& basis_x,
                       const SpectralBasis& basis_y, int k,
                       const std::string& basis_tag = "coupled");

/// Push a coefficient vector through the map: returns C' a.
Eigen::VectorXd apply_map(const FunctionalMap& map, const Eigen::VectorXd& a);

/// ICP-like pointwise recovery: alternately (a) match every Y vertex to the
/// X vertex whose spectral-coordinate row is nearest to its mapped row
/// (Psi C vs rows of Phi, ties to the lowest index), then (b) refit C as
/// the orthogonal Procrustes alignment of the matched rows.
struct PointwiseMatches {
  std::vector<int> match;      // for each Y vertex, the matched X vertex
  Eigen::VectorXd distance;    // spectral distance of each match
  Eigen::MatrixXd refined_C;   // orthogonal map after the final refinement
};

PointwiseMatches pointwise_recover(const FunctionalMap& map,
                                   const Eigen::MatrixXd& phi,
                                   const Eigen::MatrixXd& psi, int iters);

}  // namespace coharm
