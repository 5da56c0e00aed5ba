#pragma once

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

namespace coharm {

/// Write via a temp file in the same directory plus rename, so interrupted
/// runs never leave truncated artifacts.
void write_text_atomic(const std::string& path, const std::string& contents);

/// Text matrix format: "rows cols" header, then whitespace-separated rows,
/// 17 significant digits (round-trips doubles exactly).
void write_matrix(const std::string& path, const Eigen::MatrixXd& M);
Eigen::MatrixXd read_matrix(const std::string& path);

/// One value per line (eigenvalue lists).
void write_vector(const std::string& path, const Eigen::VectorXd& v);
Eigen::VectorXd read_vector(const std::string& path);

/// Correspondence files: one 0-based "i j" pair per line.
void write_pairs(const std::string& path,
                 const std::vector<std::pair<int, int>>& pairs);
std::vector<std::pair<int, int>> read_pairs(const std::string& path);

/// Optimizer trace: "iter,objective" CSV with a header line.
void write_trace_csv(const std::string& path,
                     const std::vector<double>& objective_trace);

/// Region files: one whitespace-separated vertex-index list per line.
std::vector<std::vector<int>> read_regions(const std::string& path);

/// 0/1 indicator column per region.
Eigen::MatrixXd regions_to_indicators(
    const std::vector<std::vector<int>>& regions, int n);

}  // namespace coharm
