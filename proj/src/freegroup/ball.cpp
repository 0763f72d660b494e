#include "bulab/freegroup/ball.hpp"

#include <string>

#include "bulab/errors.hpp"

namespace bulab::freegroup {

namespace {

constexpr char kLetters[4] = {'x', 'X', 'y', 'Y'};

int letter_value(char c) {
  switch (c) {
    case 'x': return 0;
    case 'X': return 1;
    case 'y': return 2;
    case 'Y': return 3;
  }
  throw InvalidValueError(std::string("not a generator letter: '") + c + "'");
}

// Inverse letters pair up under bit flip: x<->X, y<->Y.
int inverse_value(int v) { return v ^ 1; }

int rank_after(int letter, int prev) {
  return letter - (letter > inverse_value(prev) ? 1 : 0);
}

int unrank_after(int rank, int prev) {
  return rank + (rank >= inverse_value(prev) ? 1 : 0);
}

}  // namespace

WordBall::WordBall(int radius) : radius_(radius) {
  if (radius < 1) throw ConfigError("ball radius must be at least 1");
  if (radius > 18) throw ResourceError("ball radius too large to index");
  pow3_.resize(radius + 1);
  pow3_[0] = 1;
  for (int k = 1; k <= radius; ++k) pow3_[k] = 3 * pow3_[k - 1];
  offsets_.resize(radius + 2);
  offsets_[0] = 0;
  offsets_[1] = 1;
  for (int len = 1; len <= radius; ++len)
    offsets_[len + 1] = offsets_[len] + 4 * pow3_[len - 1];
  size_ = static_cast<std::size_t>(offsets_[radius + 1]);
}

std::size_t WordBall::index_of(const Word& w) const {
  if (!is_reduced(w)) throw InvalidValueError("word is not reduced: " + w);
  const int len = static_cast<int>(w.size());
  if (len > radius_) throw InvalidValueError("word is outside the ball: " + w);
  if (len == 0) return 0;
  std::int64_t layer = letter_value(w[0]);
  for (int t = 1; t < len; ++t)
    layer = layer * 3 + rank_after(letter_value(w[t]), letter_value(w[t - 1]));
  return static_cast<std::size_t>(offsets_[len] + layer);
}

Word WordBall::word_at(std::size_t index) const {
  if (index >= size_) throw InvalidValueError("ball index out of range");
  int len = 0;
  while (static_cast<std::int64_t>(index) >= offsets_[len + 1]) ++len;
  if (len == 0) return Word();
  std::int64_t layer = static_cast<std::int64_t>(index) - offsets_[len];
  Word w(len, '?');
  int prev = static_cast<int>(layer / pow3_[len - 1]);
  layer %= pow3_[len - 1];
  w[0] = kLetters[prev];
  for (int t = 1; t < len; ++t) {
    const int rank = static_cast<int>(layer / pow3_[len - 1 - t]);
    layer %= pow3_[len - 1 - t];
    prev = unrank_after(rank, prev);
    w[t] = kLetters[prev];
  }
  return w;
}

long long WordBall::left_multiply(char letter, long long index) const {
  if (index < 0) return -1;
  const int s = letter_value(letter);
  int len = 0;
  while (index >= offsets_[len + 1]) ++len;
  if (len == 0) return offsets_[1] + s;

  const std::int64_t layer = index - offsets_[len];
  const int first = static_cast<int>(layer / pow3_[len - 1]);
  const std::int64_t rest = layer % pow3_[len - 1];

  if (s == inverse_value(first)) {
    // Cancellation: drop the first letter; the second letter's rank turns
    // back into a plain base-4 digit.
    if (len == 1) return 0;
    const int r1 = static_cast<int>(rest / pow3_[len - 2]);
    const int second = unrank_after(r1, first);
    return offsets_[len - 1] + second * pow3_[len - 2] + rest % pow3_[len - 2];
  }
  if (len + 1 > radius_) return -1;
  return offsets_[len + 1] + s * pow3_[len] +
         static_cast<std::int64_t>(rank_after(first, s)) * pow3_[len - 1] + rest;
}

std::vector<std::int32_t> WordBall::left_multiply_table(const Word& w) const {
  if (!is_reduced(w)) throw InvalidValueError("word is not reduced: " + w);
  std::vector<std::int32_t> table(size_);
  for (std::size_t i = 0; i < size_; ++i) table[i] = static_cast<std::int32_t>(i);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    for (std::size_t i = 0; i < size_; ++i) {
      table[i] =
          static_cast<std::int32_t>(left_multiply(*it, table[i]));
    }
  }
  return table;
}

}  // namespace bulab::freegroup
