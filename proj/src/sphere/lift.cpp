#include "bulab/sphere/lift.hpp"

#include <cmath>
#include <deque>
#include <string>

#include "bulab/algebra/spectrum.hpp"
#include "bulab/errors.hpp"
#include "bulab/tolerances.hpp"

namespace bulab::sphere {

namespace {

using algebra::Complex;
using algebra::SampledFunction;

void require_nonvanishing(const SampledFunction& g) {
  for (std::size_t i = 0; i < g.sample_count(); ++i)
    if (std::abs(g[i]) <= tol().vanishing)
      throw VanishingError("|g| vanishes at sample " + std::to_string(i) +
                           "; a zero is already present");
}

double phase_step(Complex from, Complex to) { return std::arg(to / from); }

}  // namespace

UnwrapResult unwrap_log(const IcosphereMesh& mesh, const SampledFunction& g) {
  if (g.sample_count() != mesh.vertices.size())
    throw DimensionError("sample count does not match the mesh");
  require_nonvanishing(g);

  UnwrapResult result;

  // A face whose phase steps do not cancel encloses a zero of the continuous
  // picture; no assignment of branches can be consistent around it.
  for (std::size_t fi = 0; fi < mesh.faces.size(); ++fi) {
    const auto& f = mesh.faces[fi];
    const double s = phase_step(g[f[0]], g[f[1]]) +
                     phase_step(g[f[1]], g[f[2]]) +
                     phase_step(g[f[2]], g[f[0]]);
    if (std::lround(s / (2.0 * M_PI)) != 0) {
      result.winding_face = static_cast<int>(fi);
      return result;
    }
  }

  // Spanning-tree propagation of branches from vertex 0.
  std::vector<std::vector<int>> adjacency(mesh.vertices.size());
  for (const auto& [a, b] : mesh.edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }

  std::vector<Complex> h(g.sample_count());
  std::vector<char> seen(g.sample_count(), 0);
  h[0] = std::log(g[0]);
  seen[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adjacency[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      h[v] = h[u] + Complex(std::log(std::abs(g[v]) / std::abs(g[u])),
                            phase_step(g[u], g[v]));
      queue.push_back(v);
    }
  }

  result.lift = SampledFunction(std::move(h));
  SampledFunction expd = algebra::pointwise_exp(result.lift);
  result.max_residual = algebra::sup_distance(expd, g);
  const double bound = tol().lift_consistency * (1.0 + g.sup_norm());
  if (result.max_residual > bound)
    throw Error("lift verification failed: ||exp(h) - g|| = " +
                std::to_string(result.max_residual));
  result.ok = true;
  return result;
}

int loop_winding(const SampledFunction& g, const std::vector<int>& loop) {
  if (loop.size() < 3) throw EmptyInputError("winding needs a cycle of 3+ vertices");
  for (int v : loop)
    if (v < 0 || static_cast<std::size_t>(v) >= g.sample_count())
      throw DimensionError("loop index out of range");
  for (int v : loop)
    if (std::abs(g[v]) <= tol().vanishing)
      throw VanishingError("|g| vanishes on the loop");

  double total = 0.0;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const Complex from = g[loop[k]];
    const Complex to = g[loop[(k + 1) % loop.size()]];
    const double step = phase_step(from, to);
    if (std::abs(step) >= M_PI - tol().aliasing_margin)
      throw AliasingError("phase jump of " + std::to_string(step) +
                          " between consecutive loop vertices; refine the mesh");
    total += step;
  }
  return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

}  // namespace bulab::sphere
