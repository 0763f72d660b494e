#include "bulab/freegroup/norm.hpp"

#include <cmath>
#include <random>

#include "bulab/errors.hpp"
#include "bulab/freegroup/ball.hpp"
#include "bulab/tolerances.hpp"

namespace bulab::freegroup {

namespace {

struct TermTable {
  std::vector<std::int32_t> map;
  Complex coeff;
};

std::vector<TermTable> build_tables(const GroupAlgebraElement& a,
                                    const WordBall& ball) {
  std::vector<TermTable> tables;
  tables.reserve(a.term_count());
  for (const auto& [w, c] : a.terms())
    tables.push_back({ball.left_multiply_table(w), c});
  return tables;
}

void apply_tables(const std::vector<TermTable>& tables,
                  const std::vector<Complex>& in, std::vector<Complex>& out) {
  std::fill(out.begin(), out.end(), Complex(0.0));
  for (const TermTable& t : tables) {
    const Complex c = t.coeff;
    for (std::size_t i = 0; i < in.size(); ++i) {
      const std::int32_t j = t.map[i];
      if (j >= 0) out[j] += c * in[i];
    }
  }
}

double norm2(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& c : v) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace

GroupAlgebraElement kesten_element() {
  GroupAlgebraElement a;
  for (const char* w : {"x", "X", "y", "Y"}) a.add(w, 1.0);
  return a;
}

NormEstimate truncated_norm(const GroupAlgebraElement& a, int radius,
                            int iterations, std::uint64_t seed) {
  if (iterations <= 0) iterations = tol().power_iterations;
  if (radius < 1) throw ConfigError("ball radius must be at least 1");
  if (radius > tol().max_ball_radius)
    throw ResourceError("ball radius " + std::to_string(radius) +
                        " exceeds the cap of " +
                        std::to_string(tol().max_ball_radius));

  NormEstimate est;
  est.radius = radius;
  est.seed = seed;
  est.upper = a.l1_norm();
  if (a.empty()) return est;

  const WordBall ball(radius);
  if (a.term_count() * ball.size() > 400'000'000ull)
    throw ResourceError("term tables for " + std::to_string(a.term_count()) +
                        " terms on a ball of " + std::to_string(ball.size()) +
                        " words exceed the memory cap");
  const std::vector<TermTable> forward = build_tables(a, ball);
  const std::vector<TermTable> backward = build_tables(a.adjoint(), ball);

  // Seeded start vector; raw 53-bit draws so every platform sees the same
  // doubles.
  std::mt19937_64 rng(seed);
  std::vector<Complex> v(ball.size());
  const auto uniform = [&rng]() {
    return 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
  };
  for (Complex& c : v) c = Complex(uniform(), uniform());
  const double n0 = norm2(v);
  for (Complex& c : v) c /= n0;

  std::vector<Complex> mid(ball.size()), next(ball.size());
  double rayleigh = 0.0;
  for (int k = 0; k < iterations; ++k) {
    apply_tables(forward, v, mid);    // A v
    apply_tables(backward, mid, next);  // A* A v
    double r = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
      r += (std::conj(v[i]) * next[i]).real();
    est.rayleigh_delta = std::abs(r - rayleigh);
    rayleigh = r;
    est.iterations = k + 1;
    const double n = norm2(next);
    if (n == 0.0) {
      rayleigh = 0.0;
      break;
    }
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = next[i] / n;
  }
  est.lower = std::sqrt(std::max(rayleigh, 0.0));
  return est;
}

NormInequalityReport check_norm_inequality(const GroupAlgebraElement& a,
                                           const PartitionSpec& partition,
                                           int radius, int iterations,
                                           std::uint64_t seed) {
  NormInequalityReport report;
  report.full_l1 = a.l1_norm();
  report.sqrt_order = std::sqrt(static_cast<double>(partition.class_count()));
  report.full_lower = truncated_norm(a, radius, iterations, seed).lower;
  report.all_ok = true;

  for (const auto& [cls, component] : homogeneous_components(a, partition)) {
    NormInequalityReport::Row row;
    row.class_index = cls;
    row.class_name = partition.class_name(cls);
    row.term_count = component.term_count();
    row.component_lower = truncated_norm(component, radius, iterations, seed).lower;
    row.bound = report.sqrt_order * report.full_l1;
    row.ok = row.component_lower <= row.bound + 1e-9;
    row.empirical_ratio =
        report.full_lower > 0.0 ? row.component_lower / report.full_lower : 0.0;
    if (!row.ok) report.all_ok = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace bulab::freegroup
