#include "coharm/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coharm {

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

}  // namespace

void write_text_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open file for writing: " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

void write_matrix(const std::string& path, const Eigen::MatrixXd& M) {
  std::ostringstream out;
  out << M.rows() << " " << M.cols() << "\n";
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (j) out << " ";
      out << format_double(M(i, j));
    }
    out << "\n";
  }
  write_text_atomic(path, out.str());
}

Eigen::MatrixXd read_matrix(const std::string& path) {
  std::ifstream in = open_input(path);
  Eigen::Index rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw std::runtime_error("malformed matrix header in " + path);
  Eigen::MatrixXd M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (!(in >> M(i, j)))
        throw std::runtime_error("truncated matrix data in " + path);
  return M;
}

void write_vector(const std::string& path, const Eigen::VectorXd& v) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out << format_double(v(i)) << "\n";
  write_text_atomic(path, out.str());
}

Eigen::VectorXd read_vector(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<double> vals;
  double x = 0;
  while (in >> x) vals.push_back(x);
  return Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

void write_pairs(const std::string& path,
                 const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream out;
  for (const auto& [i, j] : pairs) out << i << " " << j << "\n";
  write_text_atomic(path, out.str());
}

std::vector<std::pair<int, int>> read_pairs(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<std::pair<int, int>> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    int i = 0, j = 0;
    if (!(ls >> i)) continue;  // blank line
    if (!(ls >> j))
      throw std::runtime_error("malformed pair at line " + std::to_string(lineno) +
                               " of " + path);
    pairs.emplace_back(i, j);
  }
  return pairs;
}

void write_trace_csv(const std::string& path,
                     const std::vector<double>& objective_trace) {
  std::ostringstream out;
  out << "iter,objective\n";
  for (std::size_t i = 0; i < objective_trace.size(); ++i)
    out << i << "," << format_double(objective_trace[i]) << "\n";
  write_text_atomic(path, out.str());
}

std::vector<std::vector<int>> read_regions(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<std::vector<int>> regions;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> region;
    int v = 0;
    while (ls >> v) region.push_back(v);
    if (!region.empty()) regions.push_back(std::move(region));
  }
  return regions;
}

Eigen::MatrixXd regions_to_indicators(
    const std::vector<std::vector<int>>& regions, int n) {
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(regions.size()));
  for (std::size_t r = 0; r < regions.size(); ++r) {
    for (int v : regions[r]) {
      if (v < 0 || v >= n)
        throw std::runtime_error("region vertex index out of range: " + std::to_string(v));
      F(v, static_cast<Eigen::Index>(r)) = 1.0;
    }
  }
  return F;
}

}  // namespace coharm
