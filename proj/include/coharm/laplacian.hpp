#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <string>

#include "coharm/mesh.hpp"

namespace coharm {

/// Cotangent stiffness matrix W and lumped mass matrix D of one mesh.
/// Edge weights c_ij = (cot a_ij + cot b_ij)/2 enter W with negative sign
/// off the diagonal and accumulate on the diagonal, so W*1 = 0, the
/// quadratic form f'Wf is the Dirichlet energy, and the pencil (W, D) has
/// nonnegative spectrum. D is stored as its diagonal, d_ii = s_i / 3.
struct LaplacianPair {
  Eigen::SparseMatrix<double> W;
  Eigen::VectorXd mass;
  int n = 0;

  /// L f = D^{-1} W f.
  Eigen::VectorXd apply(const Eigen::VectorXd& f) const;
  Eigen::MatrixXd apply(const Eigen::MatrixXd& fs) const;

  /// Cotangent edge weight (cot a + cot b)/2 of edge (i, j), i.e. -W(i,j).
  double edge_weight(int i, int j) const;
};

struct AssembleOptions {
  bool clamp_cotangents = false;  // clamp cot values to +-clamp_limit
  double clamp_limit = 1e6;
};

LaplacianPair assemble(const TriMesh& mesh, const AssembleOptions& opts = {});

/// Text dump for cross-implementation diffing: "n n nnz" header, then one
/// 0-based "i j value" triplet per stored entry.
void dump_sparse(const Eigen::SparseMatrix<double>& M, const std::string& path);

}  // namespace coharm
