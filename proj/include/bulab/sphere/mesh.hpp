#pragma once

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bulab/algebra/index_action.hpp"
#include "bulab/algebra/sampled_function.hpp"
#include "bulab/sphere/expr.hpp"
#include "bulab/sphere/finite_order_map.hpp"

namespace bulab::sphere {

// Triangulated unit sphere: vertices on the sphere, faces a closed
// triangulation (Euler characteristic 2), edges derived from the faces.
struct IcosphereMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<std::pair<int, int>> edges;  // sorted index pairs
  int level = 0;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  double max_edge_length() const;
  double min_vertex_gap() const;  // shortest edge, a lower bound proxy
};

// Icosahedron subdivided `level` times, vertices renormalized after each
// split. V = 10 * 4^level + 2.
IcosphereMesh build_icosphere(int level);

void validate_mesh(const IcosphereMesh& mesh);  // norms, Euler, manifoldness

// A mesh whose vertex set is closed under a finite-order map, together with
// the vertex permutation the map induces.
struct SymmetricMesh {
  IcosphereMesh mesh;
  algebra::IndexAction action;
};

// Closes the vertex set under the map orbit (merging points closer than the
// vertex-merge tolerance), retriangulates if vertices were added, and reads
// off the induced permutation.
SymmetricMesh symmetrize_mesh(const IcosphereMesh& mesh,
                              const FiniteOrderMap& map);

// f evaluated at every vertex.
algebra::SampledFunction sample(const FunctionExpr& f, const IcosphereMesh& mesh);

// Triangulation of a set of unit vectors in convex position (their convex
// hull). Every input point becomes a vertex. Faces are oriented outward.
std::vector<std::array<int, 3>> triangulate_sphere_points(
    const std::vector<Eigen::Vector3d>& points);

// Vertex indices near z = 0 ordered by azimuth: a cycle winding once about
// the z-axis. Used for winding-number diagnostics.
std::vector<int> equatorial_loop(const IcosphereMesh& mesh, double band = 0.25);

}  // namespace bulab::sphere
