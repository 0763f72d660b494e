#include <cmath>
#include <random>

#include "doctest.h"

#include "bulab/algebra/spectrum.hpp"
#include "bulab/errors.hpp"

using namespace bulab;
using algebra::Complex;
using algebra::SampledFunction;

namespace {

// Brute-force membership oracle: the origin lies in the hull of a planar
// point set iff no strict separating line exists. Candidate separators are
// normals of all point pairs plus the point directions themselves, which
// covers every facet and vertex of the hull. Independent of the monotone
// chain / signed distance path under test.
bool origin_in_hull_bruteforce(const std::vector<Complex>& pts) {
  if (pts.empty()) return false;
  std::vector<Complex> dirs;
  for (const Complex& p : pts)
    if (std::abs(p) > 0) dirs.push_back(p / std::abs(p));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Complex d = pts[j] - pts[i];
      if (std::abs(d) == 0.0) continue;
      const Complex n = Complex(-d.imag(), d.real()) / std::abs(d);
      dirs.push_back(n);
      dirs.push_back(-n);
    }
  for (const Complex& d : dirs) {
    bool separates = true;
    for (const Complex& p : pts) {
      if (p.real() * d.real() + p.imag() * d.imag() <= 0.0) {
        separates = false;
        break;
      }
    }
    if (separates) return false;
  }
  return true;
}

double uniform(std::mt19937_64& rng) {
  return 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
}

}  // namespace

TEST_CASE("spectrum of a constant is a single point") {
  const auto s = spectrum(SampledFunction::constant(Complex(2, 1), 5));
  CHECK(s.points.size() == 1);
  CHECK(s.hull.size() == 1);
  CHECK(s.hull[0] == Complex(2, 1));
  CHECK_THROWS_AS(spectrum(SampledFunction()), EmptyInputError);
}

TEST_CASE("collinear values give a segment hull") {
  const SampledFunction f(
      {Complex(-1), Complex(-0.25), Complex(0.5), Complex(1), Complex(0.5)});
  const auto s = spectrum(f);
  CHECK(s.points.size() == 4);  // duplicate dropped
  REQUIRE(s.hull.size() == 2);
  CHECK(s.hull[0] == Complex(-1));
  CHECK(s.hull[1] == Complex(1));

  const auto t = hull_contains_zero(s);
  CHECK(t.contains);
  CHECK(t.signed_distance == doctest::Approx(0.0));
}

TEST_CASE("hull distance is signed") {
  SUBCASE("origin inside a square") {
    const SampledFunction f(
        {Complex(1, 1), Complex(-1, 1), Complex(-1, -1), Complex(1, -1)});
    const auto t = hull_contains_zero(spectrum(f));
    CHECK(t.contains);
    CHECK(t.signed_distance == doctest::Approx(-1.0));
  }
  SUBCASE("origin outside a shifted square") {
    const SampledFunction f(
        {Complex(3, 1), Complex(1, 1), Complex(1, -1), Complex(3, -1)});
    const auto t = hull_contains_zero(spectrum(f));
    CHECK_FALSE(t.contains);
    CHECK(t.signed_distance == doctest::Approx(1.0));
    CHECK(std::abs(t.nearest - Complex(1, 0)) < 1e-12);
  }
  SUBCASE("boundary counts as inside at tolerance zero") {
    const SampledFunction f({Complex(0, -1), Complex(0, 1), Complex(2, 0)});
    const auto t = hull_contains_zero(spectrum(f));
    CHECK(t.signed_distance == doctest::Approx(0.0));
    CHECK(t.contains);
  }
}

TEST_CASE("hull membership matches the brute-force oracle") {
  std::mt19937_64 rng(1234);
  int inside_seen = 0, outside_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int count = 1 + static_cast<int>(rng() % 40);
    const Complex shift(uniform(rng) * 1.5, uniform(rng) * 1.5);
    std::vector<Complex> pts(count);
    for (auto& p : pts) p = shift + Complex(uniform(rng), uniform(rng));
    // Sprinkle in collinear sets.
    if (trial % 7 == 0)
      for (auto& p : pts) p = Complex(p.real(), shift.imag());

    const auto s = spectrum(SampledFunction(pts));
    const auto t = hull_contains_zero(s);
    const bool expected = origin_in_hull_bruteforce(pts);
    CAPTURE(trial);
    CHECK(t.contains == expected);
    (expected ? inside_seen : outside_seen)++;

    // Every sampled point sits inside or on the hull.
    for (const Complex& p : s.points)
      CHECK(algebra::signed_distance_to_hull(s.hull, p) <= 1e-12);
  }
  // The suite exercised both branches.
  CHECK(inside_seen > 100);
  CHECK(outside_seen > 100);
}

TEST_CASE("spectral radius is the max modulus") {
  CHECK(spectral_radius(SampledFunction::constant(Complex(3, 4), 2)) ==
        doctest::Approx(5.0));
  CHECK(spectral_radius(SampledFunction::zero(4)) == 0.0);
  CHECK_THROWS_AS(spectral_radius(SampledFunction()), EmptyInputError);
}

TEST_CASE("spectral radius is submultiplicative on products") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> a(8), b(8);
    for (auto& v : a) v = Complex(uniform(rng), uniform(rng));
    for (auto& v : b) v = Complex(uniform(rng), uniform(rng));
    const SampledFunction f(a), g(b);
    const double lhs = spectral_radius(pointwise_product(f, g));
    const double rhs = spectral_radius(f) * spectral_radius(g);
    CHECK(lhs <= rhs * (1.0 + 1e-12));
  }
}

TEST_CASE("principal log inverts exp away from the origin") {
  SUBCASE("constant e maps to 1") {
    const auto lg = principal_log(
        SampledFunction::constant(Complex(std::exp(1.0), 0.0), 3));
    CHECK(std::abs(lg[0] - Complex(1.0)) < 1e-14);
  }

  SUBCASE("right half-plane values round-trip") {
    std::mt19937_64 rng(777);
    std::vector<Complex> v(64);
    for (auto& c : v) c = Complex(0.1 + 2.0 * std::abs(uniform(rng)),
                                  2.0 * uniform(rng));
    const SampledFunction f(v);
    const SampledFunction lg = principal_log(f);
    const SampledFunction back = pointwise_exp(lg);
    for (std::size_t i = 0; i < v.size(); ++i)
      CHECK(std::abs(back[i] - f[i]) <= 1e-12 * std::abs(f[i]));
  }

  SUBCASE("values winding around 0 have no branch") {
    std::vector<Complex> circle(12);
    for (int k = 0; k < 12; ++k)
      circle[k] = std::polar(1.0, 2.0 * M_PI * k / 12.0);
    CHECK_THROWS_AS(principal_log(SampledFunction(circle)), NoBranchError);
  }

  SUBCASE("the cut avoids spectra hugging the negative axis") {
    // Values clustered around -1: the classical principal branch would cut
    // right through them; the adaptive branch must not.
    std::vector<Complex> v;
    for (int k = -5; k <= 5; ++k)
      v.push_back(std::polar(1.0, M_PI + 0.05 * k));
    const SampledFunction f(v);
    const SampledFunction lg = principal_log(f);
    const SampledFunction back = pointwise_exp(lg);
    CHECK(sup_distance(back, f) < 1e-12);
    // Continuity of the branch: the imaginary parts stay clustered.
    double lo = 1e9, hi = -1e9;
    for (std::size_t i = 0; i < v.size(); ++i) {
      lo = std::min(lo, lg[i].imag());
      hi = std::max(hi, lg[i].imag());
    }
    CHECK(hi - lo < 1.0);
  }
}

TEST_CASE("pointwise exp basics") {
  CHECK(std::abs(pointwise_exp(SampledFunction::zero(2))[0] - Complex(1.0)) == 0.0);
  const auto f = pointwise_exp(SampledFunction::constant(Complex(0, M_PI), 1));
  CHECK(std::abs(f[0] - Complex(-1.0)) < 1e-15);
}
