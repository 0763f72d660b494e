#include "bulab/sphere/finite_order_map.hpp"

#include <cmath>
#include <string>

#include "bulab/errors.hpp"
#include "bulab/tolerances.hpp"

namespace bulab::sphere {

namespace {

double max_abs(const Eigen::Matrix3d& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

FiniteOrderMap::FiniteOrderMap(const Eigen::Matrix3d& m, int order)
    : matrix_(m), order_(order) {
  const double eps = tol().map_order;
  if (order < 1) throw InvalidValueError("map order must be positive");
  if (max_abs(m.transpose() * m - Eigen::Matrix3d::Identity()) > eps)
    throw InvalidValueError("map matrix is not orthogonal");

  powers_.reserve(order);
  Eigen::Matrix3d p = Eigen::Matrix3d::Identity();
  for (int k = 0; k < order; ++k) {
    powers_.push_back(p);
    p = m * p;
    if (k + 1 < order && max_abs(p - Eigen::Matrix3d::Identity()) <= eps)
      throw InvalidValueError("map order is not minimal: matrix^" +
                              std::to_string(k + 1) + " is the identity");
  }
  if (max_abs(p - Eigen::Matrix3d::Identity()) > eps)
    throw InvalidValueError("matrix^order differs from the identity");
}

FiniteOrderMap FiniteOrderMap::antipodal() {
  return FiniteOrderMap(-Eigen::Matrix3d::Identity(), 2);
}

FiniteOrderMap FiniteOrderMap::rotoreflect4() {
  Eigen::Matrix3d m;
  m << 0, -1, 0,
       1,  0, 0,
       0,  0, -1;
  return FiniteOrderMap(m, 4);
}

FiniteOrderMap FiniteOrderMap::rotation(int n, const Eigen::Vector3d& axis) {
  if (n < 2) throw ConfigError("rotation order must be at least 2");
  const double len = axis.norm();
  if (len < 1e-12) throw ConfigError("rotation axis must be nonzero");
  const Eigen::Vector3d u = axis / len;
  const double angle = 2.0 * M_PI / n;
  return FiniteOrderMap(Eigen::AngleAxisd(angle, u).toRotationMatrix(), n);
}

FiniteOrderMap FiniteOrderMap::from_matrix(const Eigen::Matrix3d& m, int order) {
  return FiniteOrderMap(m, order);
}

}  // namespace bulab::sphere
