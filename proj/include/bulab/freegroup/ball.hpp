#pragma once

#include <cstdint>
#include <vector>

#include "bulab/freegroup/word.hpp"

namespace bulab::freegroup {

// Index arithmetic for the ball of reduced words of length <= radius.
// Words are numbered layer by layer (by length); within a layer the first
// letter contributes a base-4 digit and every later letter a base-3 digit,
// ranked among the three letters that do not cancel their predecessor.
// 1 + 2*(3^radius - 1) words in total; nothing is materialized, so left
// multiplication by a letter is O(1) arithmetic on indices.
class WordBall {
 public:
  explicit WordBall(int radius);

  int radius() const { return radius_; }
  std::size_t size() const { return size_; }

  std::size_t index_of(const Word& w) const;
  Word word_at(std::size_t index) const;

  // Index of letter * word(index); -1 when the product leaves the ball.
  // Once a stepwise product leaves the ball it can never return (the next
  // letter of a reduced multiplier never cancels the one just prepended),
  // so -1 is absorbing.
  long long left_multiply(char letter, long long index) const;

  // Table of index_of(w * u) over the whole ball, -1 where w*u is too long.
  std::vector<std::int32_t> left_multiply_table(const Word& w) const;

 private:
  int radius_;
  std::size_t size_;
  std::vector<std::int64_t> pow3_;     // 3^k
  std::vector<std::int64_t> offsets_;  // first index of each layer
};

}  // namespace bulab::freegroup
