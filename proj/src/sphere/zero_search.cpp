#include "bulab/sphere/zero_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "bulab/algebra/grading.hpp"
#include "bulab/errors.hpp"
#include "bulab/sphere/symmetrize.hpp"
#include "bulab/tolerances.hpp"

namespace bulab::sphere {

namespace {

using Eigen::Vector3d;

struct Cell {
  Vector3d a, b, c;
  double score = 0.0;  // optimistic lower bound for min |g| over the cell
  double best = 0.0;   // lowest probed |g|; orders ties in the pool
  bool alive = true;

  double diameter() const {
    return std::max({(a - b).norm(), (b - c).norm(), (c - a).norm()});
  }
};

// Cell value: the lowest probed |g| discounted by the observed spread. A
// steep or barely-explored cell could hide a much smaller value than its
// probes show, so it ranks aggressively; a flat cell ranks at its probed
// minimum. Greedy selection on raw minima stalls on flat non-zero basins.
double optimistic_value(double lowest, double highest) {
  return std::max(0.0, 2.0 * lowest - highest);
}

// Gauss-Newton descent on (Re g, Im g) over the tangent plane, with a step
// cap. Finishes the job once the cell sweep has localized a basin; cells
// alone crawl when the zero sits on a cell boundary.
template <typename Value>
Eigen::Vector3d polish_zero(const Value& value_c, Eigen::Vector3d p,
                            int steps) {
  const double h = 1e-6;
  for (int it = 0; it < steps; ++it) {
    Eigen::Vector3d u = std::abs(p.z()) < 0.9
                            ? Eigen::Vector3d(0, 0, 1).cross(p).normalized()
                            : Eigen::Vector3d(1, 0, 0).cross(p).normalized();
    const Eigen::Vector3d v = p.cross(u).normalized();
    const auto probe = [&](double a, double b) {
      return value_c((p + a * u + b * v).normalized());
    };
    const std::complex<double> g0 = value_c(p);
    const std::complex<double> du = (probe(h, 0) - probe(-h, 0)) / (2.0 * h);
    const std::complex<double> dv = (probe(0, h) - probe(0, -h)) / (2.0 * h);
    Eigen::Matrix2d jac;
    jac << du.real(), dv.real(), du.imag(), dv.imag();
    if (std::abs(jac.determinant()) < 1e-14) break;
    Eigen::Vector2d step = jac.inverse() * Eigen::Vector2d(-g0.real(), -g0.imag());
    const double len = step.norm();
    if (len > 0.3) step *= 0.3 / len;
    p = (p + step.x() * u + step.y() * v).normalized();
  }
  return p;
}

}  // namespace

ZeroCertificate find_zero_on(const SymmetricMesh& sym, const FunctionExpr& f,
                             const FiniteOrderMap& map, Complex lambda,
                             double tolerance,
                             const ZeroSearchOptions& options) {
  if (tolerance <= 0.0) throw ConfigError("zero tolerance must be positive");
  if (!algebra::is_admissible_root(lambda, map.order(), tol().root_of_unity))
    throw InvalidRootError("lambda is not an admissible root of unity for the map order");
  const int cells_per_round =
      options.cells_per_round > 0 ? options.cells_per_round : tol().refine_cells;
  const int max_rounds =
      options.max_rounds > 0 ? options.max_rounds : tol().refine_rounds;

  ZeroCertificate cert;
  cert.residual = std::numeric_limits<double>::infinity();

  const auto value_c = [&](const Vector3d& p) {
    return symmetrized_value(f, map, lambda, p);
  };
  const auto value = [&](const Vector3d& p) { return std::abs(value_c(p)); };
  const auto consider = [&](const Vector3d& p, double v, double diam) {
    if (v < cert.residual) {
      cert.residual = v;
      cert.point = p;
      cert.cell_diameter = diam;
    }
  };

  // Coarse sweep: vertex values seed both the cells and the running best.
  std::vector<double> vertex_value(sym.mesh.vertices.size());
  const double sweep_diam = sym.mesh.max_edge_length();
  for (std::size_t i = 0; i < sym.mesh.vertices.size(); ++i) {
    vertex_value[i] = value(sym.mesh.vertices[i]);
    consider(sym.mesh.vertices[i], vertex_value[i], sweep_diam);
  }

  std::vector<Cell> pool;
  pool.reserve(sym.mesh.faces.size() + 64);
  for (const auto& face : sym.mesh.faces) {
    Cell cell{sym.mesh.vertices[face[0]], sym.mesh.vertices[face[1]],
              sym.mesh.vertices[face[2]]};
    Vector3d centroid = (cell.a + cell.b + cell.c) / 3.0;
    centroid.normalize();
    const double vc = value(centroid);
    consider(centroid, vc, cell.diameter());
    const double lowest = std::min({vertex_value[face[0]], vertex_value[face[1]],
                                    vertex_value[face[2]], vc});
    const double highest = std::max({vertex_value[face[0]],
                                     vertex_value[face[1]],
                                     vertex_value[face[2]], vc});
    cell.score = optimistic_value(lowest, highest);
    cell.best = lowest;
    pool.push_back(cell);
  }
  cert.residual_trace.push_back(cert.residual);

  int round = 0;
  while (cert.residual > tolerance && round < max_rounds) {
    ++round;

    // The cells_per_round lowest-score cells, ties broken by pool order.
    std::vector<int> order;
    order.reserve(pool.size());
    for (int i = 0; i < static_cast<int>(pool.size()); ++i)
      if (pool[i].alive) order.push_back(i);
    const int take = std::min<int>(cells_per_round, order.size());
    std::partial_sort(order.begin(), order.begin() + take, order.end(),
                      [&](int lhs, int rhs) {
                        if (pool[lhs].score != pool[rhs].score)
                          return pool[lhs].score < pool[rhs].score;
                        if (pool[lhs].best != pool[rhs].best)
                          return pool[lhs].best < pool[rhs].best;
                        return lhs < rhs;
                      });

    for (int k = 0; k < take; ++k) {
      const int ci = order[k];
      Cell cell = pool[ci];
      pool[ci].alive = false;

      Vector3d mab = (cell.a + cell.b) * 0.5;
      Vector3d mbc = (cell.b + cell.c) * 0.5;
      Vector3d mca = (cell.c + cell.a) * 0.5;
      mab.normalize();
      mbc.normalize();
      mca.normalize();

      const std::array<Cell, 4> children = {
          Cell{cell.a, mab, mca}, Cell{cell.b, mbc, mab},
          Cell{cell.c, mca, mbc}, Cell{mab, mbc, mca}};
      for (Cell child : children) {
        const double diam = child.diameter();
        double lowest = std::numeric_limits<double>::infinity();
        double highest = 0.0;
        for (const Vector3d* p : {&child.a, &child.b, &child.c}) {
          const double v = value(*p);
          consider(*p, v, diam);
          lowest = std::min(lowest, v);
          highest = std::max(highest, v);
        }
        Vector3d centroid = (child.a + child.b + child.c) / 3.0;
        centroid.normalize();
        const double vc = value(centroid);
        consider(centroid, vc, diam);
        child.score = optimistic_value(std::min(lowest, vc), std::max(highest, vc));
        child.best = std::min(lowest, vc);
        pool.push_back(child);
      }
    }

    // Polish from this round's best point.
    if (cert.residual > tolerance) {
      const double seed_diam = cert.cell_diameter;
      const Vector3d polished = polish_zero(value_c, cert.point, 8);
      consider(polished, value(polished), seed_diam);
    }
    cert.residual_trace.push_back(cert.residual);
  }

  cert.iterations = round;
  cert.ok = cert.residual <= tolerance;
  return cert;
}

ZeroCertificate find_zero(const FunctionExpr& f, const FiniteOrderMap& map,
                          Complex lambda, double tolerance,
                          const ZeroSearchOptions& options) {
  const SymmetricMesh sym =
      symmetrize_mesh(build_icosphere(options.level), map);
  return find_zero_on(sym, f, map, lambda, tolerance, options);
}

}  // namespace bulab::sphere
