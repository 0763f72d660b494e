#include "bulab/sphere/symmetrize.hpp"

#include <string>

#include "bulab/algebra/grading.hpp"
#include "bulab/errors.hpp"
#include "bulab/tolerances.hpp"

namespace bulab::sphere {

Complex symmetrized_value(const FunctionExpr& f, const FiniteOrderMap& map,
                          Complex lambda, const Eigen::Vector3d& p) {
  Complex acc(0.0);
  Complex weight(1.0);
  for (int i = 0; i < map.order(); ++i) {
    acc += weight * f.eval(map.power(i) * p);
    weight *= lambda;
  }
  return acc;
}

algebra::SampledFunction symmetrized_function(const FunctionExpr& f,
                                              const FiniteOrderMap& map,
                                              Complex lambda,
                                              const SymmetricMesh& sym) {
  const int n = map.order();
  if (!algebra::is_admissible_root(lambda, n, tol().root_of_unity))
    throw InvalidRootError("lambda is not an admissible root of unity for order " +
                           std::to_string(n));

  std::vector<Complex> values(sym.mesh.vertices.size());
  for (std::size_t v = 0; v < values.size(); ++v)
    values[v] = symmetrized_value(f, map, lambda, sym.mesh.vertices[v]);
  algebra::SampledFunction g{std::move(values)};

  // T(g) = lambda^{n-1} g: composing with the map rotates the sum by one
  // step, which costs a factor 1/lambda = lambda^{n-1}.
  const Complex expected =
      algebra::root_powers(lambda, n).back();
  algebra::SampledFunction residual = algebra::apply_grading_operator(g, sym.action);
  residual -= expected * g;
  const double bound = tol().eigen_relation * (1.0 + g.sup_norm());
  if (residual.sup_norm() > bound)
    throw SymmetrizationError(
        "symmetrized function is not an eigenvector of the vertex action "
        "(residual " +
        std::to_string(residual.sup_norm()) +
        "); the mesh is not closed under the map");
  return g;
}

}  // namespace bulab::sphere
