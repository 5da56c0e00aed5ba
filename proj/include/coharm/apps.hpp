#pragma once

#include <Eigen/Core>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coharm/jointdiag.hpp"
#include "coharm/laplacian.hpp"
#include "coharm/spectrum.hpp"

namespace coharm {

/// Pose transfer by swapping low-frequency embedding coefficients:
/// Z = sum_{i<=n_low} a_i psi_i + (Y - sum_{i<=n_low} b_i psi_i), where a/b
/// are the X/Y embedding coefficients. The residual form supplies the
/// high-frequency tail without a full spectrum.
Eigen::MatrixX3d pose_transfer(const Eigen::MatrixX3d& X,
                               const Eigen::MatrixXd& phi,
                               const Eigen::VectorXd& mass_x,
                               const Eigen::MatrixX3d& Y,
                               const Eigen::MatrixXd& psi,
                               const Eigen::VectorXd& mass_y, int n_low);

/// Elastic-editing constraints: anchor vertices with prescribed
/// displacements, bending/stretching trade-off, spectral truncation k.
struct EditSpec {
  std::vector<int> anchors;
  Eigen::MatrixX3d displacements;  // one row per anchor
  double k_b = 1.0;
  double k_c = 0.1;
  int k = 0;  // 0 -> use all basis columns
};

EditSpec load_edit_spec(const std::string& path);
void save_edit_spec(const EditSpec& spec, const std::string& path);

struct EditResult {
  Eigen::MatrixXd alpha;           // k x 3 frequency-domain deformation
  Eigen::MatrixX3d displacement;   // n x 3 spatial deformation field
  double anchor_residual = 0.0;    // max anchor row error
};

/// Solve the frequency-domain saddle system with blocks
/// basis'(k_b L^2 - k_c L) basis and basis' M for (alpha, gamma); the
/// spatial field is basis * alpha. Throws when the system is singular.
EditResult edit_solve(const LaplacianPair& lap, const Eigen::MatrixXd& basis,
                      const EditSpec& spec);

/// Replay a frequency-domain deformation on the second shape of a coupled
/// pair: returns Y + psi_hat * alpha.
Eigen::MatrixX3d edit_transfer(const Eigen::MatrixXd& psi_hat,
                               const Eigen::MatrixXd& alpha,
                               const Eigen::MatrixX3d& Y);

/// Per-shape data entering the similarity computation.
struct ShapeSpectrum {
  LaplacianPair lap;
  EigenBasis basis;
};

struct SimilarityOptions {
  int k = 20;
  Penalty penalty = Penalty::DiagDifference;
  double mu = -1.0;  // adaptive by default
  SolveOptions solve;
};

/// Pairwise dissimilarity: jointly diagonalize each pair and average the
/// two off/diag ratios of the coupled quadratic forms. Symmetric, zero
/// diagonal. Coupling pairs must be present for every unordered pair
/// (key (i, j) with i < j).
Eigen::MatrixXd similarity_matrix(
    const std::vector<ShapeSpectrum>& shapes,
    const std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>&
        couplings,
    const SimilarityOptions& opts = {});

}  // namespace coharm
