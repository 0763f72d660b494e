#include "bulab/algebra/grading.hpp"

#include <cmath>
#include <string>

#include "bulab/errors.hpp"
#include "bulab/tolerances.hpp"

namespace bulab::algebra {

bool is_admissible_root(Complex lambda, int n, double tolerance) {
  if (n < 1) return false;
  Complex p(1.0);
  for (int i = 0; i < n; ++i) p *= lambda;
  return std::abs(p - Complex(1.0)) <= tolerance &&
         std::abs(lambda - Complex(1.0)) > tolerance;
}

bool is_primitive_root(Complex lambda, int n, double tolerance) {
  if (!is_admissible_root(lambda, n, tolerance)) return false;
  Complex p(1.0);
  for (int m = 1; m < n; ++m) {
    p *= lambda;
    if (std::abs(p - Complex(1.0)) <= tolerance) return false;
  }
  return true;
}

std::vector<Complex> root_powers(Complex lambda, int n) {
  std::vector<Complex> powers(n);
  Complex p(1.0);
  for (int i = 0; i < n; ++i) {
    powers[i] = p;
    p *= lambda;
  }
  return powers;
}

SampledFunction apply_grading_operator(const SampledFunction& f,
                                       const IndexAction& act) {
  if (static_cast<int>(f.sample_count()) != act.size())
    throw DimensionError("function has " + std::to_string(f.sample_count()) +
                         " samples but the action is on " +
                         std::to_string(act.size()) + " indices");
  std::vector<Complex> out(f.sample_count());
  for (int i = 0; i < act.size(); ++i) out[i] = f[act(i)];
  return SampledFunction(std::move(out));
}

SampledFunction project_component(const SampledFunction& f,
                                  const IndexAction& act, int degree,
                                  Complex lambda) {
  const int n = act.order();
  if (!is_admissible_root(lambda, n, tol().root_of_unity))
    throw InvalidRootError("lambda is not an admissible root of unity for order " +
                           std::to_string(n));
  if (degree < 0 || degree >= n)
    throw InvalidValueError("component degree out of range");

  const std::vector<Complex> powers = root_powers(lambda, n);
  SampledFunction iterate = f;  // T^i f
  SampledFunction acc = f;      // weight of T^0 is 1
  for (int i = 1; i < n; ++i) {
    iterate = apply_grading_operator(iterate, act);
    // lambda^{-i j} = conj(lambda^{i j}) for roots of unity.
    acc += std::conj(powers[(i * degree) % n]) * iterate;
  }
  acc *= Complex(1.0 / n);
  return acc;
}

GradingDecomposition decompose(const SampledFunction& f, const IndexAction& act,
                               Complex lambda) {
  const int n = act.order();
  if (!is_primitive_root(lambda, n, tol().root_of_unity))
    throw InvalidRootError(
        "full decomposition needs lambda primitive of order " +
        std::to_string(n) +
        "; a non-primitive root only projects onto a subalgebra");

  GradingDecomposition dec;
  dec.lambda = lambda;
  dec.order = n;
  dec.components.reserve(n);
  for (int j = 0; j < n; ++j)
    dec.components.push_back(project_component(f, act, j, lambda));

  SampledFunction sum = dec.components[0];
  for (int j = 1; j < n; ++j) sum += dec.components[j];
  const double residual = sup_distance(sum, f);
  const double bound = tol().reconstruction * (1.0 + f.sup_norm());
  if (residual > bound)
    throw InvalidRootError("component sum misses the function by " +
                           std::to_string(residual));
  return dec;
}

ProductGradingReport check_product_grading(const GradingDecomposition& a,
                                           const GradingDecomposition& b,
                                           const IndexAction& act) {
  if (a.order != b.order || std::abs(a.lambda - b.lambda) > 1e-15)
    throw IncompatibleError("decompositions use different gradings");
  if (a.components.empty() || b.components.empty())
    throw EmptyInputError("empty decomposition");
  if (a.components[0].sample_count() != b.components[0].sample_count())
    throw IncompatibleError("decompositions live on different sample sets");

  const int n = a.order;
  const std::vector<Complex> powers = root_powers(a.lambda, n);

  ProductGradingReport report;
  report.passed = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      SampledFunction prod = pointwise_product(a.components[i], b.components[j]);
      SampledFunction lhs = apply_grading_operator(prod, act);
      lhs -= powers[(i + j) % n] * prod;
      ProductGradingReport::Entry e;
      e.i = i;
      e.j = j;
      e.residual = lhs.sup_norm();
      e.bound = tol().product_grading *
                (1.0 + a.components[i].sup_norm() * b.components[j].sup_norm());
      report.max_residual = std::max(report.max_residual, e.residual);
      if (e.residual > e.bound) report.passed = false;
      report.entries.push_back(e);
    }
  }
  return report;
}

}  // namespace bulab::algebra
