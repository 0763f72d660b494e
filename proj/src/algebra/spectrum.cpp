#include "bulab/algebra/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bulab/errors.hpp"
#include "bulab/tolerances.hpp"

namespace bulab::algebra {

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double dist_to_segment(Complex a, Complex b, Complex p, Complex* nearest) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) /
        len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  const Complex q = a + t * ab;
  if (nearest) *nearest = q;
  return std::abs(p - q);
}

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<Complex> convex_hull(std::vector<Complex> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n <= 2) return points;

  // Andrew's monotone chain; collinear points are dropped, so degenerate
  // inputs collapse to their two extremes.
  std::vector<Complex> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
    h[k++] = points[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
    h[k++] = points[i];
  }
  h.resize(k - 1);  // last point equals the first
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  return h;
}

double signed_distance_to_hull(const std::vector<Complex>& hull, Complex p,
                               Complex* nearest) {
  if (hull.empty()) throw EmptyInputError("empty hull");

  if (hull.size() == 1) {
    if (nearest) *nearest = hull[0];
    return std::abs(p - hull[0]);
  }
  if (hull.size() == 2) {
    return dist_to_segment(hull[0], hull[1], p, nearest);
  }

  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  Complex best_point = hull[0];
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex a = hull[i];
    const Complex b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < 0.0) inside = false;
    Complex q;
    const double d = dist_to_segment(a, b, p, &q);
    if (d < best) {
      best = d;
      best_point = q;
    }
  }
  if (nearest) *nearest = best_point;
  return inside ? -best : best;
}

SpectrumApprox spectrum(const SampledFunction& f) {
  if (f.empty()) throw EmptyInputError("spectrum of an empty function");

  std::vector<Complex> pts = f.values();
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<Complex> dedup;
  dedup.reserve(pts.size());
  const double eps = tol().point_dedup;
  for (const Complex& v : pts) {
    if (!dedup.empty() && std::abs(dedup.back().real() - v.real()) <= eps &&
        std::abs(dedup.back().imag() - v.imag()) <= eps)
      continue;
    dedup.push_back(v);
  }

  SpectrumApprox s;
  s.hull = convex_hull(dedup);
  s.points = std::move(dedup);
  return s;
}

HullZeroTest hull_contains_zero(const SpectrumApprox& s, double tolerance) {
  HullZeroTest t;
  t.signed_distance = signed_distance_to_hull(s.hull, Complex(0.0), &t.nearest);
  t.contains = t.signed_distance <= tolerance;
  return t;
}

double spectral_radius(const SampledFunction& f) {
  if (f.empty()) throw EmptyInputError("spectral radius of an empty function");
  return f.sup_norm();
}

SampledFunction principal_log(const SampledFunction& f) {
  const SpectrumApprox s = spectrum(f);
  const HullZeroTest t = hull_contains_zero(s);
  if (t.contains)
    throw NoBranchError(
        "the sampled spectrum surrounds the origin (hull distance " +
        std::to_string(t.signed_distance) + "); no logarithm branch exists");

  // Branch centre: direction of the nearest hull point. The cut is the
  // opposite ray, which cannot meet the hull.
  const double theta0 = std::arg(t.nearest);
  std::vector<Complex> out(f.sample_count());
  for (std::size_t i = 0; i < f.sample_count(); ++i) {
    const Complex v = f[i];
    double delta = std::arg(v) - theta0;
    delta -= 2.0 * M_PI * std::floor((delta + M_PI) / (2.0 * M_PI));
    out[i] = Complex(std::log(std::abs(v)), theta0 + delta);
  }
  return SampledFunction(std::move(out));
}

SampledFunction pointwise_exp(const SampledFunction& f) {
  std::vector<Complex> out(f.sample_count());
  for (std::size_t i = 0; i < f.sample_count(); ++i) out[i] = std::exp(f[i]);
  return SampledFunction(std::move(out));
}

}  // namespace bulab::algebra
