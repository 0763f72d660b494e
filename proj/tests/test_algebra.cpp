#include <random>

#include "doctest.h"

#include "bulab/algebra/grading.hpp"
#include "bulab/algebra/index_action.hpp"
#include "bulab/algebra/sampled_function.hpp"
#include "bulab/errors.hpp"

using namespace bulab;
using algebra::Complex;
using algebra::IndexAction;
using algebra::SampledFunction;

namespace {

SampledFunction seeded_function(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng]() {
    return 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
  };
  std::vector<Complex> v(count);
  for (auto& c : v) c = Complex(uniform(), uniform());
  return SampledFunction(std::move(v));
}

// A single cycle through all indices: order = count.
IndexAction cycle_action(int count) {
  std::vector<int> images(count);
  for (int i = 0; i < count; ++i) images[i] = (i + 1) % count;
  return IndexAction::from_permutation(std::move(images));
}

// Pairs (2k, 2k+1) swapped: an involution without fixed points.
IndexAction swap_action(int count) {
  std::vector<int> images(count);
  for (int i = 0; i < count; ++i) images[i] = i ^ 1;
  return IndexAction::from_permutation(std::move(images));
}

}  // namespace

TEST_CASE("sampled function rejects non-finite values") {
  CHECK_THROWS_AS(
      SampledFunction({Complex(1.0), Complex(std::nan(""), 0.0)}),
      InvalidValueError);
  CHECK_THROWS_AS(
      SampledFunction({Complex(std::numeric_limits<double>::infinity(), 0.0)}),
      InvalidValueError);
}

TEST_CASE("sampled function arithmetic is pointwise") {
  const SampledFunction f({Complex(1, 2), Complex(3, -1)});
  const SampledFunction g({Complex(0, 1), Complex(2, 0)});
  const SampledFunction p = pointwise_product(f, g);
  CHECK(p[0] == Complex(1, 2) * Complex(0, 1));
  CHECK(p[1] == Complex(6, -2));
  CHECK(f.sup_norm() == doctest::Approx(std::sqrt(10.0)));
  CHECK_THROWS_AS(pointwise_product(f, SampledFunction({Complex(1)})),
                  DimensionError);
}

TEST_CASE("pointwise powers multiply out") {
  const SampledFunction f({Complex(2, 0), Complex(0, 1)});
  const SampledFunction f3 = f.pointwise_pow(3);
  CHECK(f3[0] == Complex(8, 0));
  CHECK(f3[1] == Complex(0, -1));
  CHECK(f.pointwise_pow(0)[1] == Complex(1, 0));
}

TEST_CASE("index action computes its least order") {
  CHECK(swap_action(6).order() == 2);
  CHECK(cycle_action(5).order() == 5);
  // Mixed cycle lengths: lcm.
  IndexAction mixed = IndexAction::from_permutation({1, 0, 3, 4, 2});
  CHECK(mixed.order() == 6);
  CHECK_THROWS_AS(IndexAction::from_permutation({0, 0, 1}), InvalidValueError);
}

TEST_CASE("grading operator composes with the permutation") {
  const SampledFunction f({Complex(1), Complex(2), Complex(3), Complex(4)});
  const IndexAction act = cycle_action(4);

  SUBCASE("constants are fixed") {
    const SampledFunction c = SampledFunction::constant(Complex(5, -2), 4);
    CHECK(sup_distance(apply_grading_operator(c, act), c) == 0.0);
  }

  SUBCASE("transposition swaps values") {
    const SampledFunction g({Complex(7), Complex(9)});
    const SampledFunction t = apply_grading_operator(g, swap_action(2));
    CHECK(t[0] == Complex(9));
    CHECK(t[1] == Complex(7));
  }

  SUBCASE("applying it order times is the identity") {
    SampledFunction g = f;
    for (int i = 0; i < act.order(); ++i) g = apply_grading_operator(g, act);
    CHECK(sup_distance(g, f) == 0.0);
  }

  SUBCASE("size mismatch is a dimension error") {
    CHECK_THROWS_AS(apply_grading_operator(f, swap_action(2)), DimensionError);
  }
}

TEST_CASE("projections split odd and even parts") {
  // Antipodal-style pairs: value and its negation.
  const SampledFunction f({Complex(0.3, 1.0), Complex(-0.3, -1.0)});
  const IndexAction act = swap_action(2);

  SUBCASE("an odd function is its own odd part") {
    const SampledFunction odd = project_component(f, act, 1, Complex(-1.0));
    CHECK(sup_distance(odd, f) < 1e-15);
  }

  SUBCASE("constants project to zero odd part") {
    const SampledFunction c = SampledFunction::constant(Complex(2, 1), 2);
    const SampledFunction odd = project_component(c, act, 1, Complex(-1.0));
    CHECK(odd.sup_norm() < 1e-15);
  }

  SUBCASE("bad roots are rejected") {
    CHECK_THROWS_AS(project_component(f, act, 1, Complex(0.5)),
                    InvalidRootError);
    CHECK_THROWS_AS(project_component(f, act, 1, Complex(1.0)),
                    InvalidRootError);
    // i has order 4, not 2.
    CHECK_THROWS_AS(project_component(f, act, 1, Complex(0.0, 1.0)),
                    InvalidRootError);
  }
}

TEST_CASE("decomposition reconstructs and is idempotent") {
  const int n = 4;
  const Complex lambda(0.0, 1.0);
  const IndexAction act = cycle_action(8);
  REQUIRE(act.order() == 8);
  // Build an action of order 4 on 8 samples: two 4-cycles.
  std::vector<int> images = {1, 2, 3, 0, 5, 6, 7, 4};
  const IndexAction four = IndexAction::from_permutation(std::move(images));
  REQUIRE(four.order() == n);

  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const SampledFunction f = seeded_function(seed, 8);
    const auto dec = decompose(f, four, lambda);
    REQUIRE(dec.components.size() == 4);

    SampledFunction sum = dec.components[0];
    for (int j = 1; j < n; ++j) sum += dec.components[j];
    CHECK(sup_distance(sum, f) <= 1e-12 * (1.0 + f.sup_norm()));

    const auto powers = algebra::root_powers(lambda, n);
    for (int j = 0; j < n; ++j) {
      // Eigenvector relation.
      SampledFunction lhs = apply_grading_operator(dec.components[j], four);
      lhs -= powers[j] * dec.components[j];
      CHECK(lhs.sup_norm() <= 1e-10 * (1.0 + f.sup_norm()));
      // Idempotence and annihilation.
      for (int k = 0; k < n; ++k) {
        const SampledFunction proj =
            project_component(dec.components[j], four, k, lambda);
        const double expected =
            k == j ? sup_distance(proj, dec.components[j]) : proj.sup_norm();
        CHECK(expected <= 1e-12 * (1.0 + f.sup_norm()));
      }
    }
  }
}

TEST_CASE("full decomposition demands a primitive root") {
  const IndexAction four = IndexAction::from_permutation({1, 2, 3, 0});
  const SampledFunction f = seeded_function(99, 4);
  // -1 is admissible for order 4 but only spans half the eigenspaces.
  CHECK_THROWS_AS(decompose(f, four, Complex(-1.0)), InvalidRootError);
  // The single projection is still legitimate.
  const SampledFunction p = project_component(f, four, 1, Complex(-1.0));
  SampledFunction lhs = apply_grading_operator(p, four);
  lhs -= Complex(-1.0) * p;
  CHECK(lhs.sup_norm() <= 1e-12 * (1.0 + f.sup_norm()));
}

TEST_CASE("product grading holds degree arithmetic") {
  const IndexAction four = IndexAction::from_permutation({1, 2, 3, 0, 5, 6, 7, 4});
  const Complex lambda(0.0, 1.0);
  const auto dec1 = decompose(seeded_function(21, 8), four, lambda);
  const auto dec2 = decompose(seeded_function(22, 8), four, lambda);

  const auto report = check_product_grading(dec1, dec2, four);
  CHECK(report.passed);
  CHECK(report.entries.size() == 16);
  CHECK(report.max_residual <= 1e-10 * (1.0 + 100.0));

  SUBCASE("degree-1 times degree-1 lands in degree 2") {
    const auto prod = pointwise_product(dec1.components[1], dec2.components[1]);
    SampledFunction lhs = apply_grading_operator(prod, four);
    lhs -= Complex(-1.0) * prod;  // lambda^2 = -1
    CHECK(lhs.sup_norm() <= 1e-10 * (1.0 + prod.sup_norm()));
  }

  SUBCASE("odd times odd is even under an involution") {
    const IndexAction two = swap_action(6);
    const auto d1 = decompose(seeded_function(31, 6), two, Complex(-1.0));
    const auto d2 = decompose(seeded_function(32, 6), two, Complex(-1.0));
    const auto prod = pointwise_product(d1.components[1], d2.components[1]);
    SampledFunction lhs = apply_grading_operator(prod, two);
    lhs -= prod;  // eigenvalue +1
    CHECK(lhs.sup_norm() <= 1e-10 * (1.0 + prod.sup_norm()));
  }

  SUBCASE("mismatched gradings are rejected") {
    const auto other = decompose(seeded_function(23, 8), four, Complex(0.0, -1.0));
    CHECK_THROWS_AS(check_product_grading(dec1, other, four),
                    IncompatibleError);
  }
}
