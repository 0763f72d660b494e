#pragma once

#include "bulab/algebra/sampled_function.hpp"
#include "bulab/sphere/expr.hpp"
#include "bulab/sphere/finite_order_map.hpp"
#include "bulab/sphere/mesh.hpp"

namespace bulab::sphere {

// g(v) = sum_{i=0}^{n-1} lambda^i f(map^i(v)) at every vertex. The result is
// a lambda^{n-1} eigenvector of the induced vertex permutation; that residual
// is verified before returning, so a mesh that is not closed under the map is
// rejected here.
algebra::SampledFunction symmetrized_function(const FunctionExpr& f,
                                              const FiniteOrderMap& map,
                                              Complex lambda,
                                              const SymmetricMesh& sym);

// Same sum evaluated at an arbitrary point (no mesh).
Complex symmetrized_value(const FunctionExpr& f, const FiniteOrderMap& map,
                          Complex lambda, const Eigen::Vector3d& p);

}  // namespace bulab::sphere
