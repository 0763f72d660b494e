#pragma once

#include <vector>

namespace bulab::algebra {

// A bijection of sample indices together with its multiplicative order.
// Realizes a finite-order self-map at the sample level; composition with
// a SampledFunction is the grading operator T.
class IndexAction {
 public:
  // Validates bijectivity and computes the order (lcm of cycle lengths),
  // so the stored order is always the least one.
  static IndexAction from_permutation(std::vector<int> images);

  static IndexAction identity(int size);

  int size() const { return static_cast<int>(images_.size()); }
  int order() const { return order_; }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

 private:
  IndexAction(std::vector<int> images, int order)
      : images_(std::move(images)), order_(order) {}

  std::vector<int> images_;
  int order_ = 1;
};

}  // namespace bulab::algebra
