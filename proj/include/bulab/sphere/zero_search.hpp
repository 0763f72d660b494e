#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bulab/sphere/expr.hpp"
#include "bulab/sphere/finite_order_map.hpp"
#include "bulab/sphere/mesh.hpp"

namespace bulab::sphere {

// Witness that the symmetrized function nearly vanishes somewhere. A failed
// certificate is a report, not an exception: the function must vanish, so
// failure means the refinement was insufficient for the requested tolerance.
struct ZeroCertificate {
  Eigen::Vector3d point = Eigen::Vector3d::UnitZ();
  double residual = 0.0;       // |g(point)|
  double cell_diameter = 0.0;  // diameter of the cell that produced the point
  int iterations = 0;          // refinement rounds executed
  bool ok = false;
  std::vector<double> residual_trace;  // best residual after each round
};

struct ZeroSearchOptions {
  int level = 3;           // coarse mesh subdivision level for the sweep
  int cells_per_round = 0; // 0 = default from Tolerances
  int max_rounds = 0;      // 0 = default from Tolerances
};

// Multi-start adaptive refinement on |g| for g = sum lambda^i f(map^i(.)):
// sweep a coarse symmetrized mesh, then repeatedly subdivide the lowest-|g|
// cells (midpoint split projected back to the sphere) until the residual
// target or the round cap is reached.
ZeroCertificate find_zero(const FunctionExpr& f, const FiniteOrderMap& map,
                          Complex lambda, double tolerance,
                          const ZeroSearchOptions& options = {});

// Same search on a caller-prepared symmetrized mesh (reusable across seeds).
ZeroCertificate find_zero_on(const SymmetricMesh& sym, const FunctionExpr& f,
                             const FiniteOrderMap& map, Complex lambda,
                             double tolerance,
                             const ZeroSearchOptions& options = {});

}  // namespace bulab::sphere
