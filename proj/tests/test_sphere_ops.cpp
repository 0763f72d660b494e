#include <cmath>

#include "doctest.h"

#include "bulab/algebra/grading.hpp"
#include "bulab/algebra/spectrum.hpp"
#include "bulab/errors.hpp"
#include "bulab/sphere/lift.hpp"
#include "bulab/sphere/symmetrize.hpp"
#include "bulab/sphere/zero_search.hpp"

using namespace bulab;
using algebra::Complex;
using algebra::SampledFunction;
using sphere::FiniteOrderMap;
using sphere::FunctionExpr;
using Eigen::Vector3d;

TEST_CASE("composition with the antipodal action negates odd coordinates") {
  const auto sym = sphere::symmetrize_mesh(sphere::build_icosphere(2),
                                           FiniteOrderMap::antipodal());
  const SampledFunction z =
      sphere::sample(FunctionExpr::parse("z"), sym.mesh);
  const SampledFunction tz = algebra::apply_grading_operator(z, sym.action);
  SampledFunction sum = tz;
  sum += z;
  CHECK(sum.sup_norm() == 0.0);
}

TEST_CASE("antipodal symmetrization doubles an odd function") {
  const auto map = FiniteOrderMap::antipodal();
  const auto sym = sphere::symmetrize_mesh(sphere::build_icosphere(2), map);
  const auto f = FunctionExpr::parse("x + i*y");
  const SampledFunction g =
      sphere::symmetrized_function(f, map, Complex(-1.0), sym);
  const SampledFunction direct = sphere::sample(f, sym.mesh);
  for (std::size_t i = 0; i < g.sample_count(); ++i)
    CHECK(std::abs(g[i] - 2.0 * direct[i]) < 1e-14);
}

TEST_CASE("rotation symmetrization kills fixed points for every admissible root") {
  const auto map = FiniteOrderMap::rotation(3, Vector3d(0, 0, 1));
  const auto sym = sphere::symmetrize_mesh(sphere::build_icosphere(2), map);
  const auto f = FunctionExpr::parse(sphere::random_trig_polynomial(7));
  const Complex lambda = std::polar(1.0, 2.0 * M_PI / 3.0);
  const SampledFunction g = sphere::symmetrized_function(f, map, lambda, sym);

  int poles_seen = 0;
  for (int i = 0; i < sym.mesh.vertex_count(); ++i) {
    if (std::abs(std::abs(sym.mesh.vertices[i].z()) - 1.0) < 1e-12) {
      ++poles_seen;
      CHECK(std::abs(g[i]) < 1e-12);
    }
  }
  CHECK(poles_seen == 2);
}

TEST_CASE("the order-4 rotoreflection turns z into 4z under lambda = -1") {
  const auto map = FiniteOrderMap::rotoreflect4();
  const auto sym = sphere::symmetrize_mesh(sphere::build_icosphere(2), map);
  const SampledFunction g = sphere::symmetrized_function(
      FunctionExpr::parse("z"), map, Complex(-1.0), sym);
  for (int i = 0; i < sym.mesh.vertex_count(); ++i)
    CHECK(std::abs(g[i] - 4.0 * sym.mesh.vertices[i].z()) <= 1e-12);
}

TEST_CASE("symmetrized functions are eigenvectors of the vertex action") {
  const auto map = FiniteOrderMap::rotoreflect4();
  const auto sym = sphere::symmetrize_mesh(sphere::build_icosphere(2), map);
  for (std::uint64_t seed : {3u, 4u}) {
    const auto f = FunctionExpr::parse(sphere::random_trig_polynomial(seed));
    for (const Complex lambda : {Complex(-1.0), Complex(0.0, 1.0)}) {
      const SampledFunction g =
          sphere::symmetrized_function(f, map, lambda, sym);
      SampledFunction lhs = algebra::apply_grading_operator(g, sym.action);
      // T(g) = lambda^{n-1} g = conj(lambda) g for roots of unity.
      lhs -= std::conj(lambda) * g;
      CHECK(lhs.sup_norm() <= 1e-10 * (1.0 + g.sup_norm()));
    }
  }
}

TEST_CASE("zero search finds the poles of the antipodal symmetrization") {
  // f = x + i y is odd, so g = 2f vanishes exactly at the poles.
  const auto cert = sphere::find_zero(FunctionExpr::parse("x + i*y"),
                                      FiniteOrderMap::antipodal(),
                                      Complex(-1.0), 1e-8);
  REQUIRE(cert.ok);
  CHECK(cert.residual < 1e-8);
  CHECK(std::abs(std::abs(cert.point.z()) - 1.0) < 1e-4);
  CHECK(std::abs(cert.point.norm() - 1.0) < 1e-12);
  CHECK(cert.iterations <= 60);
  CHECK_FALSE(cert.residual_trace.empty());
}

TEST_CASE("zero search lands on the equator for the rotoreflected z") {
  const auto cert =
      sphere::find_zero(FunctionExpr::parse("z"), FiniteOrderMap::rotoreflect4(),
                        Complex(-1.0), 1e-8);
  REQUIRE(cert.ok);
  CHECK(std::abs(cert.point.z()) < 1e-6);
}

TEST_CASE("zero search succeeds on seeded random functions") {
  const auto map = FiniteOrderMap::antipodal();
  const auto sym = sphere::symmetrize_mesh(sphere::build_icosphere(3), map);
  for (std::uint64_t seed = 200; seed < 210; ++seed) {
    const auto f = FunctionExpr::parse(sphere::random_trig_polynomial(seed));
    const auto cert =
        sphere::find_zero_on(sym, f, map, Complex(-1.0), 1e-6);
    CAPTURE(seed);
    CHECK(cert.ok);
    CHECK(cert.residual < 1e-6);
  }
}

TEST_CASE("zero search rejects bad arguments") {
  CHECK_THROWS_AS(sphere::find_zero(FunctionExpr::parse("z"),
                                    FiniteOrderMap::antipodal(), Complex(-1.0),
                                    0.0),
                  ConfigError);
  CHECK_THROWS_AS(sphere::find_zero(FunctionExpr::parse("z"),
                                    FiniteOrderMap::antipodal(),
                                    Complex(0.0, 1.0), 1e-6),
                  InvalidRootError);
}

TEST_CASE("unwrap recovers a known lift up to 2 pi i") {
  const auto mesh = sphere::build_icosphere(3);
  const auto h0 = sphere::sample(FunctionExpr::parse("z + i*x"), mesh);
  const auto g = algebra::pointwise_exp(h0);
  const auto result = sphere::unwrap_log(mesh, g);
  REQUIRE(result.ok);

  const Complex offset = result.lift[0] - h0[0];
  CHECK(std::abs(offset.real()) < 1e-10);
  CHECK(std::abs(offset.imag() / (2.0 * M_PI) -
                 std::lround(offset.imag() / (2.0 * M_PI))) < 1e-10);
  for (std::size_t i = 0; i < g.sample_count(); ++i)
    CHECK(std::abs(result.lift[i] - h0[i] - offset) < 1e-8);
}

TEST_CASE("the constant -1 lifts to i pi") {
  const auto mesh = sphere::build_icosphere(1);
  const auto result = sphere::unwrap_log(
      mesh, SampledFunction::constant(Complex(-1.0), mesh.vertex_count()));
  REQUIRE(result.ok);
  CHECK(std::abs(result.lift[0] - Complex(0.0, M_PI)) < 1e-14);
}

TEST_CASE("winding around the axis blocks the lift") {
  // The level-0 icosahedron has no pole vertices, so x + i y never vanishes
  // on it, yet it winds around the axis: some face must catch the phase.
  const auto mesh = sphere::build_icosphere(0);
  const auto g = sphere::sample(FunctionExpr::parse("x + i*y"), mesh);
  const auto result = sphere::unwrap_log(mesh, g);
  CHECK_FALSE(result.ok);
  CHECK(result.winding_face >= 0);
  CHECK(result.winding_face < static_cast<int>(mesh.faces.size()));
}

TEST_CASE("a vanishing sample is rejected before unwrapping") {
  const auto mesh = sphere::build_icosphere(1);  // has poles
  const auto g = sphere::sample(FunctionExpr::parse("x + i*y"), mesh);
  CHECK_THROWS_AS(sphere::unwrap_log(mesh, g), VanishingError);
}

TEST_CASE("loop winding counts powers of the azimuth") {
  const auto mesh = sphere::build_icosphere(3);
  const auto loop = sphere::equatorial_loop(mesh);
  const auto g1 = sphere::sample(FunctionExpr::parse("x + i*y"), mesh);
  const auto g2 = sphere::sample(FunctionExpr::parse("(x + i*y)^2"), mesh);
  const auto constant =
      SampledFunction::constant(Complex(0.5, 0.5), mesh.vertex_count());

  CHECK(sphere::loop_winding(constant, loop) == 0);
  CHECK(sphere::loop_winding(g1, loop) == 1);
  CHECK(sphere::loop_winding(g2, loop) == 2);

  SUBCASE("winding adds under products") {
    CHECK(sphere::loop_winding(pointwise_product(g1, g2), loop) == 3);
  }

  SUBCASE("a half-turn jump is reported as aliasing") {
    // Sign-alternating samples sit exactly at the ambiguous jump of pi.
    const SampledFunction alternating(
        {Complex(1.0), Complex(-1.0), Complex(1.0), Complex(-1.0)});
    CHECK_THROWS_AS(sphere::loop_winding(alternating, {0, 1, 2, 3}),
                    AliasingError);
  }
}

TEST_CASE("finer meshes only lower the sampled minimum of |g|") {
  const auto map = FiniteOrderMap::antipodal();
  const auto f = FunctionExpr::parse(sphere::random_trig_polynomial(42));
  double previous = std::numeric_limits<double>::infinity();
  for (int level : {1, 2, 3, 4}) {
    const auto sym = sphere::symmetrize_mesh(sphere::build_icosphere(level), map);
    const SampledFunction g =
        sphere::symmetrized_function(f, map, Complex(-1.0), sym);
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < g.sample_count(); ++i)
      lowest = std::min(lowest, std::abs(g[i]));
    CHECK(lowest <= previous);
    previous = lowest;
  }
}
