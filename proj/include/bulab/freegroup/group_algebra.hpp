#pragma once

#include <complex>
#include <cstdint>
#include <map>

#include "bulab/freegroup/quotient.hpp"
#include "bulab/freegroup/word.hpp"

namespace bulab::freegroup {

using Complex = std::complex<double>;

// A finitely supported complex combination of reduced words. Exact-zero
// coefficients are never stored.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;

  static GroupAlgebraElement delta(const Word& w, Complex c = 1.0);

  void add(const Word& w, Complex c);

  const std::map<Word, Complex>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  double l1_norm() const;
  int max_word_length() const;

  // Coefficients conjugated, words inverted.
  GroupAlgebraElement adjoint() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs);
  GroupAlgebraElement& operator*=(Complex c);

  friend bool operator==(const GroupAlgebraElement&,
                         const GroupAlgebraElement&) = default;

 private:
  std::map<Word, Complex> terms_;
};

// Multiplication in the group algebra: coefficient products on reduced word
// products. Throws ResourceError past the term cap.
GroupAlgebraElement convolve(const GroupAlgebraElement& u,
                             const GroupAlgebraElement& v,
                             std::size_t term_cap = 0);  // 0 = default cap

// Splits an element by the partition class of each word. Components sum to
// the element with exact coefficient equality, and the product of a class-a
// component with a class-b component is supported in class a*b.
std::map<int, GroupAlgebraElement> homogeneous_components(
    const GroupAlgebraElement& a, const PartitionSpec& partition);

// Seeded random element: up to max_terms words of length <= max_length with
// complex coefficients in [-1,1]^2. Platform-independent for a fixed seed.
GroupAlgebraElement random_element(std::uint64_t seed, int max_terms = 5,
                                   int max_length = 4);

}  // namespace bulab::freegroup
