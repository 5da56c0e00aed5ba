#include "coharm/mesh.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "coharm/io.hpp"

namespace coharm {

namespace {

double face_area(const TriMesh& mesh, int f) {
  const auto a = mesh.vertices.row(mesh.faces(f, 0));
  const auto b = mesh.vertices.row(mesh.faces(f, 1));
  const auto c = mesh.vertices.row(mesh.faces(f, 2));
  return 0.5 * (b - a).cross(c - a).norm();
}

double bbox_diagonal(const Eigen::MatrixX3d& V) {
  if (V.rows() == 0) return 0.0;
  return (V.colwise().maxCoeff() - V.colwise().minCoeff()).norm();
}

void validate(const TriMesh& mesh) {
  const int n = mesh.num_vertices();
  const int m = mesh.num_faces();
  if (n < 3 || m < 1) throw std::runtime_error("mesh too small: needs >= 3 vertices and >= 1 face");

  const double diag = bbox_diagonal(mesh.vertices);
  const double area_tol = 1e-12 * diag * diag;

  for (int f = 0; f < m; ++f) {
    const int i = mesh.faces(f, 0), j = mesh.faces(f, 1), k = mesh.faces(f, 2);
    if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
      throw std::runtime_error("face " + std::to_string(f) + " references vertex out of range");
    if (i == j || j == k || i == k)
      throw std::runtime_error("degenerate face " + std::to_string(f) + ": repeated vertex index");
    if (face_area(mesh, f) < area_tol)
      throw std::runtime_error("degenerate face " + std::to_string(f) + ": area below tolerance");
  }

  // Edge manifoldness: every undirected edge in at most 2 faces.
  std::map<std::pair<int, int>, int> edge_count;
  for (int f = 0; f < m; ++f) {
    for (int c = 0; c < 3; ++c) {
      int a = mesh.faces(f, c), b = mesh.faces(f, (c + 1) % 3);
      if (a > b) std::swap(a, b);
      if (++edge_count[{a, b}] > 2)
        throw std::runtime_error("non-manifold edge (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ") shared by more than 2 faces");
    }
  }

  // Connectivity: one component (lambda_1 multiplicity equals component count).
  std::vector<std::vector<int>> adj(n);
  for (const auto& [e, cnt] : edge_count) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        bfs.push(w);
      }
  }
  if (reached != n) {
    int orphan = 0;
    while (seen[orphan]) ++orphan;
    throw std::runtime_error("mesh is disconnected: vertex " + std::to_string(orphan) +
                             " unreachable from vertex 0");
  }
}

bool has_off_header(const std::string& path) {
  std::ifstream in(path);
  std::string tok;
  return bool(in >> tok) && tok == "OFF";
}

std::string lowercase_ext(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return "";
  std::string ext = path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

// Next non-blank, non-comment line.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

TriMesh load_off(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file: " + path);
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno) || line.substr(0, 3) != "OFF")
    throw std::runtime_error(path + ": missing OFF header");

  long n = 0, m = 0, e = 0;
  // Counts may share the header line ("OFF n m e") or follow it.
  {
    std::istringstream hs(line.substr(3));
    if (!(hs >> n >> m >> e)) {
      if (!next_line(in, line, lineno))
        throw std::runtime_error(path + ": missing OFF counts line");
      std::istringstream cs(line);
      if (!(cs >> n >> m >> e))
        throw std::runtime_error(path + ": malformed counts at line " + std::to_string(lineno));
    }
  }
  if (n <= 0 || m < 0) throw std::runtime_error(path + ": invalid vertex/face counts");

  Eigen::MatrixX3d V(n, 3);
  for (long i = 0; i < n; ++i) {
    if (!next_line(in, line, lineno))
      throw std::runtime_error(path + ": unexpected end of file in vertex list");
    std::istringstream vs(line);
    if (!(vs >> V(i, 0) >> V(i, 1) >> V(i, 2)))
      throw std::runtime_error(path + ": malformed vertex at line " + std::to_string(lineno));
  }
  Eigen::MatrixX3i F(m, 3);
  for (long f = 0; f < m; ++f) {
    if (!next_line(in, line, lineno))
      throw std::runtime_error(path + ": unexpected end of file in face list");
    std::istringstream fs(line);
    int cnt = 0;
    if (!(fs >> cnt))
      throw std::runtime_error(path + ": malformed face at line " + std::to_string(lineno));
    if (cnt != 3)
      throw std::runtime_error(path + ": non-triangular face at line " + std::to_string(lineno));
    if (!(fs >> F(f, 0) >> F(f, 1) >> F(f, 2)))
      throw std::runtime_error(path + ": malformed face at line " + std::to_string(lineno));
  }
  return {std::move(V), std::move(F)};
}

// Face entries like "7", "7/1" or "7/1/3": the leading vertex index only.
int parse_obj_index(const std::string& tok, int lineno, const std::string& path) {
  try {
    const int idx = std::stoi(tok.substr(0, tok.find('/')));
    if (idx == 0) throw std::invalid_argument("zero");
    return idx;
  } catch (const std::exception&) {
    throw std::runtime_error(path + ": malformed face index '" + tok + "' at line " +
                             std::to_string(lineno));
  }
}

TriMesh load_obj(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file: " + path);
  std::vector<Eigen::RowVector3d> verts;
  std::vector<Eigen::RowVector3i> tris;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Eigen::RowVector3d v;
      if (!(ls >> v(0) >> v(1) >> v(2)))
        throw std::runtime_error(path + ": malformed vertex at line " + std::to_string(lineno));
      verts.push_back(v);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string tok;
      while (ls >> tok) idx.push_back(parse_obj_index(tok, lineno, path));
      if (idx.size() != 3)
        throw std::runtime_error(path + ": non-triangular face at line " + std::to_string(lineno));
      Eigen::RowVector3i f;
      for (int c = 0; c < 3; ++c) {
        // 1-based, negative counts from the end.
        int i = idx[c] > 0 ? idx[c] - 1 : static_cast<int>(verts.size()) + idx[c];
        f(c) = i;
      }
      tris.push_back(f);
    } else if (warnings) {
      warnings->push_back(path + ": ignoring directive '" + tag + "' at line " +
                          std::to_string(lineno));
    }
  }
  TriMesh mesh;
  mesh.vertices.resize(static_cast<Eigen::Index>(verts.size()), 3);
  for (std::size_t i = 0; i < verts.size(); ++i) mesh.vertices.row(static_cast<Eigen::Index>(i)) = verts[i];
  mesh.faces.resize(static_cast<Eigen::Index>(tris.size()), 3);
  for (std::size_t f = 0; f < tris.size(); ++f) mesh.faces.row(static_cast<Eigen::Index>(f)) = tris[f];
  return mesh;
}

}  // namespace

TriMesh make_mesh(Eigen::MatrixX3d vertices, Eigen::MatrixX3i faces) {
  TriMesh mesh{std::move(vertices), std::move(faces)};
  validate(mesh);
  return mesh;
}

TriMesh load_mesh(const std::string& path, std::vector<std::string>* warnings) {
  const std::string ext = lowercase_ext(path);
  TriMesh mesh;
  if (ext == "obj")
    mesh = load_obj(path, warnings);
  else if (ext == "off" || has_off_header(path))
    mesh = load_off(path);
  else
    throw std::runtime_error("unrecognized mesh format: " + path);
  validate(mesh);
  return mesh;
}

void save_off(const TriMesh& mesh, const std::string& path) {
  std::ostringstream out;
  out << "OFF\n" << mesh.num_vertices() << " " << mesh.num_faces() << " 0\n";
  char buf[96];
  for (int i = 0; i < mesh.num_vertices(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", mesh.vertices(i, 0),
                  mesh.vertices(i, 1), mesh.vertices(i, 2));
    out << buf;
  }
  for (int f = 0; f < mesh.num_faces(); ++f)
    out << "3 " << mesh.faces(f, 0) << " " << mesh.faces(f, 1) << " " << mesh.faces(f, 2) << "\n";
  write_text_atomic(path, out.str());
}

Eigen::VectorXd vertex_areas(const TriMesh& mesh) {
  Eigen::VectorXd s = Eigen::VectorXd::Zero(mesh.num_vertices());
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const double area = face_area(mesh, f);
    for (int c = 0; c < 3; ++c) s(mesh.faces(f, c)) += area;
  }
  return s;
}

double total_surface_area(const TriMesh& mesh) {
  double area = 0.0;
  for (int f = 0; f < mesh.num_faces(); ++f) area += face_area(mesh, f);
  return area;
}

Eigen::MatrixX3d corner_cotangents(const TriMesh& mesh) {
  Eigen::MatrixX3d cot(mesh.num_faces(), 3);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    for (int c = 0; c < 3; ++c) {
      const Vec3 p = mesh.vertices.row(mesh.faces(f, c));
      const Vec3 u = mesh.vertices.row(mesh.faces(f, (c + 1) % 3)).transpose() - p;
      const Vec3 v = mesh.vertices.row(mesh.faces(f, (c + 2) % 3)).transpose() - p;
      const double cross = u.cross(v).norm();
      if (cross == 0.0)
        throw std::runtime_error("degenerate face " + std::to_string(f) +
                                 ": zero cross product");
      cot(f, c) = u.dot(v) / cross;
    }
  }
  return cot;
}

Eigen::MatrixX3d corner_angles(const TriMesh& mesh) {
  Eigen::MatrixX3d ang(mesh.num_faces(), 3);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    for (int c = 0; c < 3; ++c) {
      const Vec3 p = mesh.vertices.row(mesh.faces(f, c));
      const Vec3 u = mesh.vertices.row(mesh.faces(f, (c + 1) % 3)).transpose() - p;
      const Vec3 v = mesh.vertices.row(mesh.faces(f, (c + 2) % 3)).transpose() - p;
      ang(f, c) = std::atan2(u.cross(v).norm(), u.dot(v));
    }
  }
  return ang;
}

Eigen::VectorXd graph_geodesics(const TriMesh& mesh, int source) {
  const int n = mesh.num_vertices();
  if (source < 0 || source >= n)
    throw std::invalid_argument("graph_geodesics: source out of range");

  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    for (int c = 0; c < 3; ++c) {
      const int a = mesh.faces(f, c), b = mesh.faces(f, (c + 1) % 3);
      const double len = (mesh.vertices.row(a) - mesh.vertices.row(b)).norm();
      adj[a].emplace_back(b, len);
      adj[b].emplace_back(a, len);
    }
  }

  Eigen::VectorXd dist = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist(source) = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d > dist(v)) continue;
    for (const auto& [w, len] : adj[v]) {
      if (d + len < dist(w)) {
        dist(w) = d + len;
        heap.emplace(dist(w), w);
      }
    }
  }
  if (!dist.allFinite())
    throw std::runtime_error("graph_geodesics: unreachable vertex (mesh not connected?)");
  return dist;
}

double geodesic_diameter(const TriMesh& mesh, int num_sources, std::uint64_t seed) {
  const int n = mesh.num_vertices();
  num_sources = std::min(num_sources, n);
  double diameter = 0.0;
  // Deterministic stride sampling; the seed only rotates the start offset.
  const int offset = static_cast<int>(seed % static_cast<std::uint64_t>(n));
  for (int s = 0; s < num_sources; ++s) {
    const int src = static_cast<int>((offset + static_cast<long>(s) * n / num_sources) % n);
    diameter = std::max(diameter, graph_geodesics(mesh, src).maxCoeff());
  }
  return diameter;
}

int max_vertex_degree(const TriMesh& mesh) {
  std::map<std::pair<int, int>, char> edges;
  for (int f = 0; f < mesh.num_faces(); ++f)
    for (int c = 0; c < 3; ++c) {
      int a = mesh.faces(f, c), b = mesh.faces(f, (c + 1) % 3);
      if (a > b) std::swap(a, b);
      edges[{a, b}] = 1;
    }
  std::vector<int> degree(mesh.num_vertices(), 0);
  for (const auto& [e, one] : edges) {
    ++degree[e.first];
    ++degree[e.second];
  }
  return *std::max_element(degree.begin(), degree.end());
}

}  // namespace coharm
