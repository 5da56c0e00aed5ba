#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace coharm {

/// Triangle mesh: n vertex positions and m triangles as 0-based index
/// triples. Instances produced by make_mesh / load_mesh are validated
/// (in-range indices, no degenerate faces, edge-manifold, connected)
/// and treated as immutable afterwards.
struct TriMesh {
  Eigen::MatrixX3d vertices;
  Eigen::MatrixX3i faces;

  int num_vertices() const { return static_cast<int>(vertices.rows()); }
  int num_faces() const { return static_cast<int>(faces.rows()); }
};

/// Validate raw buffers and build a TriMesh. Throws std::runtime_error
/// naming the offending vertex/face/edge on any violation.
TriMesh make_mesh(Eigen::MatrixX3d vertices, Eigen::MatrixX3i faces);

/// Load an OFF or OBJ file (triangles only, format chosen by extension or
/// OFF header sniffing). OBJ indices are converted from 1-based; unknown
/// OBJ directives are skipped and reported through `warnings` if given.
TriMesh load_mesh(const std::string& path,
                  std::vector<std::string>* warnings = nullptr);

/// Write an OFF file with enough digits that reloading reproduces the
/// coordinates bit-exactly.
void save_off(const TriMesh& mesh, const std::string& path);

/// s_i = sum of the areas of all triangles incident to vertex i.
Eigen::VectorXd vertex_areas(const TriMesh& mesh);

double total_surface_area(const TriMesh& mesh);

/// Per-face cotangents of the three interior angles, via the dot/cross
/// formulation. Column c holds the cotangent at corner faces(f, c).
Eigen::MatrixX3d corner_cotangents(const TriMesh& mesh);

/// Per-face interior angles in radians, same layout as corner_cotangents.
Eigen::MatrixX3d corner_angles(const TriMesh& mesh);

/// Dijkstra distances over the edge graph, weighted by Euclidean edge
/// length, from one source vertex.
Eigen::VectorXd graph_geodesics(const TriMesh& mesh, int source);

/// Max graph-geodesic distance seen from `num_sources` deterministic
/// sample sources (a cheap lower bound on the true diameter).
double geodesic_diameter(const TriMesh& mesh, int num_sources = 8,
                         std::uint64_t seed = 0);

/// Max vertex degree over the edge graph.
int max_vertex_degree(const TriMesh& mesh);

}  // namespace coharm
