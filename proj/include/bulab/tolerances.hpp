#pragma once

#include <cstddef>

namespace bulab {

// Central numeric tolerances and resource caps. Checks report the measured
// residual next to the bound they were tested against, never a bare flag.
struct Tolerances {
  double root_of_unity = 1e-9;     // |lambda^n - 1| admissibility
  double reconstruction = 1e-12;   // sum of graded components vs. original
  double idempotence = 1e-12;      // P_j(P_j f) vs. P_j f
  double eigen_relation = 1e-10;   // T(P_j f) vs. lambda^j P_j f
  double product_grading = 1e-10;  // component products vs. expected degree
  double point_dedup = 1e-14;      // spectrum value dedup radius
  double hull_membership = 1e-12;  // point-inside-hull slack
  double exp_roundtrip = 1e-12;    // exp(principal_log(f)) vs. f, relative
  double lift_consistency = 1e-10; // exp(h) vs. g after unwrapping
  double vertex_merge = 1e-9;      // orbit point merge radius
  double map_order = 1e-12;        // matrix^n vs. identity, orthogonality
  double vanishing = 1e-12;        // |g| below this counts as a zero
  double aliasing_margin = 1e-9;   // phase jumps must stay below pi by this

  int refine_cells = 8;            // cells subdivided per search round
  int refine_rounds = 60;
  int power_iterations = 300;
  int max_subdivision_level = 9;
  int max_ball_radius = 12;
  std::size_t convolution_term_cap = 1'000'000;
};

inline const Tolerances& tol() {
  static const Tolerances t;
  return t;
}

}  // namespace bulab
