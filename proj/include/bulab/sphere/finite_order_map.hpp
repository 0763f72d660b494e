#pragma once

#include <vector>

#include <Eigen/Dense>

namespace bulab::sphere {

// An orthogonal self-map of the sphere with verified finite order: no power
// below `order` is the identity, and matrix^order is. Orthogonal matrices
// cover the built-in cases (antipodal map, the order-4 rotoreflection,
// axis rotations); custom matrices are accepted when they pass the same
// checks.
class FiniteOrderMap {
 public:
  static FiniteOrderMap antipodal();

  // (x, y, z) -> (-y, x, -z): quarter turn about z composed with the
  // reflection z -> -z. Order 4, no fixed point on the sphere.
  static FiniteOrderMap rotoreflect4();

  static FiniteOrderMap rotation(int n, const Eigen::Vector3d& axis);

  static FiniteOrderMap from_matrix(const Eigen::Matrix3d& m, int order);

  int order() const { return order_; }
  const Eigen::Matrix3d& matrix() const { return matrix_; }

  Eigen::Vector3d operator()(const Eigen::Vector3d& p) const {
    return matrix_ * p;
  }

  // matrix^k for k in [0, order).
  const Eigen::Matrix3d& power(int k) const { return powers_[k]; }

 private:
  FiniteOrderMap(const Eigen::Matrix3d& m, int order);

  Eigen::Matrix3d matrix_;
  int order_;
  std::vector<Eigen::Matrix3d> powers_;
};

}  // namespace bulab::sphere
