#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bulab/freegroup/group_algebra.hpp"
#include "bulab/freegroup/quotient.hpp"

namespace bulab::freegroup {

// Bracket around the operator norm of left convolution on l^2 of the group:
// lower comes from the compression to the ball of radius `radius` (the norm
// of a compression never exceeds the norm), upper from the coefficient l^1
// sum (words act as unitaries). Lower bounds grow with the radius: the
// compressions are nested.
struct NormEstimate {
  double lower = 0.0;
  double upper = 0.0;
  int radius = 0;
  int iterations = 0;
  double rayleigh_delta = 0.0;
  std::uint64_t seed = 0;
};

// Power iteration on (P L_a P)* (P L_a P) with a seeded start vector; the
// reported lower bound is the square root of the final Rayleigh quotient,
// a valid lower bound at any iteration count. Deterministic given the seed.
NormEstimate truncated_norm(const GroupAlgebraElement& a, int radius,
                            int iterations = 0,  // 0 = default
                            std::uint64_t seed = 1);

// x + X + y + Y: the element whose operator norm is 2*sqrt(3), used as a
// convergence yardstick for the truncated estimates.
GroupAlgebraElement kesten_element();

struct NormInequalityReport {
  struct Row {
    int class_index = 0;
    std::string class_name;
    std::size_t term_count = 0;
    double component_lower = 0.0;  // nu_R(x_i)
    double bound = 0.0;            // sqrt(n) * l1(x)
    bool ok = false;
    double empirical_ratio = 0.0;  // nu_R(x_i) / nu_R(x)
  };
  std::vector<Row> rows;
  double full_lower = 0.0;
  double full_l1 = 0.0;
  double sqrt_order = 0.0;
  bool all_ok = false;
};

// Per homogeneous component x_i of a under the partition: checks the sound
// consequence nu_R(x_i) <= sqrt(n) * l1(x) of the component norm inequality
// |x|_op >= |x_i|_op / sqrt(n), and records the empirical ratio against the
// full element's truncated bound.
NormInequalityReport check_norm_inequality(const GroupAlgebraElement& a,
                                           const PartitionSpec& partition,
                                           int radius, int iterations = 0,
                                           std::uint64_t seed = 1);

}  // namespace bulab::freegroup
