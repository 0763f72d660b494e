#pragma once

#include <vector>

#include "bulab/algebra/sampled_function.hpp"
#include "bulab/sphere/mesh.hpp"

namespace bulab::sphere {

// Result of the discrete logarithm construction. On failure `winding_face`
// is the face whose phase sum is a nonzero multiple of 2*pi: the discrete
// witness that g winds around 0 and admits no global logarithm on this mesh.
struct UnwrapResult {
  bool ok = false;
  algebra::SampledFunction lift;  // h with exp(h) = g, rooted at vertex 0
  int winding_face = -1;
  double max_residual = 0.0;  // ||exp(h) - g||_inf when ok
};

// Builds h with exp(h) = g vertex by vertex: root h(0) at the principal
// logarithm, breadth-first over the edge graph choosing the branch of
// log(g(child)/g(parent)) with phase in (-pi, pi]. Face phase sums are
// checked first; any nonzero one is returned as the obstruction.
UnwrapResult unwrap_log(const IcosphereMesh& mesh,
                        const algebra::SampledFunction& g);

// (1 / 2*pi) times the unwrapped phase accumulated along a closed vertex
// cycle, rounded to the nearest integer. Consecutive jumps must stay below
// pi or the count would alias.
int loop_winding(const algebra::SampledFunction& g, const std::vector<int>& loop);

}  // namespace bulab::sphere
