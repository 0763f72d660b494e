#include <cmath>
#include <set>

#include "doctest.h"

#include "bulab/errors.hpp"
#include "bulab/sphere/finite_order_map.hpp"
#include "bulab/sphere/mesh.hpp"

using namespace bulab;
using sphere::FiniteOrderMap;
using sphere::IcosphereMesh;
using Eigen::Vector3d;

TEST_CASE("icosphere counts follow the subdivision formula") {
  const IcosphereMesh base = sphere::build_icosphere(0);
  CHECK(base.vertex_count() == 12);
  CHECK(base.faces.size() == 20);
  CHECK(base.edges.size() == 30);

  for (int level : {1, 2, 3}) {
    const IcosphereMesh mesh = sphere::build_icosphere(level);
    CHECK(mesh.vertex_count() == 10 * (1 << (2 * level)) + 2);
    CHECK(static_cast<long long>(mesh.vertex_count()) -
              static_cast<long long>(mesh.edges.size()) +
              static_cast<long long>(mesh.faces.size()) ==
          2);
    for (const auto& v : mesh.vertices)
      CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
  }

  CHECK_THROWS_AS(sphere::build_icosphere(10), ResourceError);
  CHECK_THROWS_AS(sphere::build_icosphere(-1), ConfigError);
}

TEST_CASE("finite order maps verify their invariants") {
  const FiniteOrderMap anti = FiniteOrderMap::antipodal();
  CHECK(anti.order() == 2);
  CHECK((anti.matrix() * anti.matrix() - Eigen::Matrix3d::Identity()).norm() ==
        0.0);

  const FiniteOrderMap rf = FiniteOrderMap::rotoreflect4();
  CHECK(rf.order() == 4);
  Eigen::Matrix3d sq = rf.matrix() * rf.matrix();
  Eigen::Matrix3d expected;
  expected << -1, 0, 0, 0, -1, 0, 0, 0, 1;
  CHECK((sq - expected).norm() <= 1e-15);

  const FiniteOrderMap rot = FiniteOrderMap::rotation(5, Vector3d(0, 0, 1));
  CHECK(rot.order() == 5);

  // Wrong claimed order and non-orthogonal matrices are rejected.
  CHECK_THROWS_AS(FiniteOrderMap::from_matrix(-Eigen::Matrix3d::Identity(), 4),
                  InvalidValueError);
  CHECK_THROWS_AS(
      FiniteOrderMap::from_matrix(2.0 * Eigen::Matrix3d::Identity(), 1),
      InvalidValueError);
  CHECK_THROWS_AS(FiniteOrderMap::rotation(1, Vector3d(0, 0, 1)), ConfigError);
}

TEST_CASE("the rotoreflection moves every point of the sphere") {
  const FiniteOrderMap rf = FiniteOrderMap::rotoreflect4();
  const IcosphereMesh mesh = sphere::build_icosphere(4);
  double closest = 1e9;
  for (const auto& v : mesh.vertices)
    closest = std::min(closest, (rf(v) - v).norm());
  CHECK(closest > 0.5);
}

TEST_CASE("antipodal symmetrization is a fixed-point-free involution") {
  const IcosphereMesh mesh = sphere::build_icosphere(2);
  const auto sym = sphere::symmetrize_mesh(mesh, FiniteOrderMap::antipodal());

  // The icosphere is already centrally symmetric: nothing was added.
  CHECK(sym.mesh.vertex_count() == mesh.vertex_count());
  CHECK(sym.action.order() == 2);
  for (int i = 0; i < sym.action.size(); ++i) {
    CHECK(sym.action(i) != i);
    CHECK((sym.mesh.vertices[sym.action(i)] + sym.mesh.vertices[i]).norm() ==
          0.0);
  }
}

TEST_CASE("rotoreflection symmetrization grows and retriangulates the mesh") {
  const IcosphereMesh mesh = sphere::build_icosphere(3);
  const auto sym =
      sphere::symmetrize_mesh(mesh, FiniteOrderMap::rotoreflect4());

  CHECK(sym.mesh.vertex_count() > mesh.vertex_count());
  CHECK(sym.mesh.vertex_count() <= 4 * mesh.vertex_count());
  CHECK(sym.action.order() == 4);
  for (int i = 0; i < sym.action.size(); ++i) CHECK(sym.action(i) != i);

  // validate_mesh ran inside; double-check Euler here as a belt.
  CHECK(static_cast<long long>(sym.mesh.vertex_count()) -
            static_cast<long long>(sym.mesh.edges.size()) +
            static_cast<long long>(sym.mesh.faces.size()) ==
        2);

  // The permutation tracks the map on coordinates.
  const auto& m = sym.mesh;
  for (int i = 0; i < m.vertex_count(); ++i) {
    const Vector3d image = FiniteOrderMap::rotoreflect4()(m.vertices[i]);
    CHECK((m.vertices[sym.action(i)] - image).norm() < 1e-9);
  }
}

TEST_CASE("half-turn symmetrization fixes exactly the poles") {
  const IcosphereMesh mesh = sphere::build_icosphere(2);
  const auto sym = sphere::symmetrize_mesh(
      mesh, FiniteOrderMap::rotation(2, Vector3d(0, 0, 1)));
  CHECK(sym.mesh.vertex_count() == mesh.vertex_count());

  int fixed = 0;
  for (int i = 0; i < sym.action.size(); ++i) {
    if (sym.action(i) == i) {
      ++fixed;
      CHECK(std::abs(std::abs(sym.mesh.vertices[i].z()) - 1.0) < 1e-12);
    }
  }
  CHECK(fixed == 2);
}

TEST_CASE("triple-rotation symmetrization keeps all vertices on the sphere") {
  const auto sym = sphere::symmetrize_mesh(
      sphere::build_icosphere(2),
      FiniteOrderMap::rotation(3, Vector3d(0, 0, 1)));
  CHECK(sym.action.order() == 3);
  CHECK(sym.mesh.vertex_count() > 162);
  // Orbits of size 3 except on the axis.
  std::set<int> orbit_sizes;
  for (int i = 0; i < sym.action.size(); ++i) {
    int size = 1, j = sym.action(i);
    while (j != i) {
      j = sym.action(j);
      ++size;
    }
    orbit_sizes.insert(size);
  }
  CHECK(orbit_sizes == std::set<int>{1, 3});
}

TEST_CASE("equatorial loops wind once around the axis") {
  const IcosphereMesh mesh = sphere::build_icosphere(3);
  const auto loop = sphere::equatorial_loop(mesh);
  CHECK(loop.size() >= 8);
  double total = 0.0;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const Vector3d& a = mesh.vertices[loop[k]];
    const Vector3d& b = mesh.vertices[loop[(k + 1) % loop.size()]];
    double delta = std::atan2(b.y(), b.x()) - std::atan2(a.y(), a.x());
    delta -= 2.0 * M_PI * std::floor((delta + M_PI) / (2.0 * M_PI));
    total += delta;
  }
  CHECK(std::lround(total / (2.0 * M_PI)) == 1);
}
