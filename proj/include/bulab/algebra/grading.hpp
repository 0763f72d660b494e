#pragma once

#include <vector>

#include "bulab/algebra/index_action.hpp"
#include "bulab/algebra/sampled_function.hpp"

namespace bulab::algebra {

// True when |lambda^n - 1| is within tolerance and lambda != 1.
bool is_admissible_root(Complex lambda, int n, double tolerance = 1e-9);

// True when additionally no smaller positive power of lambda is 1.
bool is_primitive_root(Complex lambda, int n, double tolerance = 1e-9);

// lambda^0 .. lambda^{n-1} by repeated multiplication.
std::vector<Complex> root_powers(Complex lambda, int n);

// (T f)[i] = f[act(i)]; applying it act.order() times gives f back exactly.
SampledFunction apply_grading_operator(const SampledFunction& f,
                                       const IndexAction& act);

// The averaging projection P_j = (1/n) sum_i lambda^{-ij} T^i onto the
// lambda^j eigenspace of T. Any admissible lambda is accepted; each P_j is
// a genuine spectral projection regardless of primitivity.
SampledFunction project_component(const SampledFunction& f,
                                  const IndexAction& act, int degree,
                                  Complex lambda);

// The n homogeneous components of a function plus the root used to split
// them. components[j] is the lambda^j eigenvector part.
struct GradingDecomposition {
  std::vector<SampledFunction> components;
  Complex lambda;
  int order = 0;

  const SampledFunction& component(int j) const { return components[j]; }
};

// Full eigenspace split of f under T. Requires lambda primitive of order
// act.order(): only then do the n projections sum to the identity, which
// the reconstruction invariant demands. The residual is checked before
// returning.
GradingDecomposition decompose(const SampledFunction& f, const IndexAction& act,
                               Complex lambda);

struct ProductGradingReport {
  struct Entry {
    int i = 0, j = 0;
    double residual = 0.0;  // ||T(c_i c_j) - lambda^{i+j} c_i c_j||_inf
    double bound = 0.0;
  };
  std::vector<Entry> entries;
  double max_residual = 0.0;
  bool passed = false;
};

// Checks that products of homogeneous components are homogeneous of the
// summed degree: the grading axiom at sample level.
ProductGradingReport check_product_grading(const GradingDecomposition& a,
                                           const GradingDecomposition& b,
                                           const IndexAction& act);

}  // namespace bulab::algebra
