#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "bulab/algebra/sampled_function.hpp"

namespace bulab::sphere {

using algebra::Complex;

// Expressions in the sphere coordinates x, y, z with complex constants.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' integer)?
//   base   := number | 'i' | 'x' | 'y' | 'z' | '(' expr ')' | func '(' expr ')'
//   func   := 'exp' | 'sin' | 'cos'
//
// Whitespace is insignificant. Numbers may carry a decimal point and an
// exponent suffix. Division by a syntactic zero is rejected at parse time.
class FunctionExpr {
 public:
  struct Node;

  static FunctionExpr parse(std::string_view src);

  Complex eval(const Eigen::Vector3d& p) const;
  Complex eval(double x, double y, double z) const;

  // Canonical text form; re-parses to a structurally identical tree.
  std::string str() const;

  bool same_tree(const FunctionExpr& other) const;

 private:
  explicit FunctionExpr(std::shared_ptr<const Node> root)
      : root_(std::move(root)) {}

  std::shared_ptr<const Node> root_;
};

// Seeded random polynomial in x, y, z of total degree <= max_degree with
// complex coefficients uniform in scale*[-1,1]^2, rendered in the expression
// grammar. The same seed always yields the same text on every platform.
std::string random_trig_polynomial(std::uint64_t seed, int max_degree = 3,
                                   double scale = 1.0);

}  // namespace bulab::sphere
