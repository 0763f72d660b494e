#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bulab::freegroup {

// A bijection of {0, ..., degree-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // validates bijectivity
  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int s) const { return images_[s]; }
  const std::vector<int>& images() const { return images_; }

  // (p * q)(s) = p(q(s)): apply q first.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  int order() const;

  // Cycle notation, e.g. "(0 2 1)"; "e" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

}  // namespace bulab::freegroup
