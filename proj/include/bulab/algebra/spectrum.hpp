#pragma once

#include <vector>

#include "bulab/algebra/sampled_function.hpp"

namespace bulab::algebra {

// Sampled value range of a function plus the planar convex hull of that
// range. For a C(X) model the spectrum is the value range, so the sampled
// version is an inner approximation of the true spectrum.
struct SpectrumApprox {
  std::vector<Complex> points;  // deduplicated values
  std::vector<Complex> hull;    // hull vertices, counter-clockwise; may be
                                // a single point or a segment
};

SpectrumApprox spectrum(const SampledFunction& f);

struct HullZeroTest {
  bool contains = false;
  // Euclidean distance from the origin to the hull boundary, negative when
  // the origin is inside. Zero on the boundary.
  double signed_distance = 0.0;
  // Point of the hull nearest the origin (boundary point).
  Complex nearest = 0.0;
};

// Does the hull contain the origin? contains = (signed_distance <= tolerance).
HullZeroTest hull_contains_zero(const SpectrumApprox& s, double tolerance = 0.0);

// Max modulus over the sampled values.
double spectral_radius(const SampledFunction& f);

// Pointwise logarithm along a branch whose cut is the ray from the origin
// away from the hull's nearest point, so the cut provably misses the
// sampled spectrum. Throws NoBranchError when the hull contains 0.
SampledFunction principal_log(const SampledFunction& f);

SampledFunction pointwise_exp(const SampledFunction& f);

// Monotone-chain hull of a planar point set, counter-clockwise, degenerate
// inputs collapse to a point or segment.
std::vector<Complex> convex_hull(std::vector<Complex> points);

// Signed distance from p to the hull (same conventions as HullZeroTest);
// also reports the nearest boundary point.
double signed_distance_to_hull(const std::vector<Complex>& hull, Complex p,
                               Complex* nearest = nullptr);

}  // namespace bulab::algebra
