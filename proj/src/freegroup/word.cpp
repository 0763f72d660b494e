#include "bulab/freegroup/word.hpp"

#include "bulab/errors.hpp"

namespace bulab::freegroup {

bool is_generator_letter(char c) {
  return c == 'x' || c == 'X' || c == 'y' || c == 'Y';
}

char inverse_letter(char c) {
  switch (c) {
    case 'x': return 'X';
    case 'X': return 'x';
    case 'y': return 'Y';
    case 'Y': return 'y';
  }
  throw InvalidValueError(std::string("not a generator letter: '") + c + "'");
}

bool is_reduced(std::string_view letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!is_generator_letter(letters[i])) return false;
    if (i > 0 && letters[i] == inverse_letter(letters[i - 1])) return false;
  }
  return true;
}

Word reduce(std::string_view letters) {
  Word out;
  out.reserve(letters.size());
  for (char c : letters) {
    if (!is_generator_letter(c))
      throw InvalidValueError(std::string("not a generator letter: '") + c + "'");
    if (!out.empty() && out.back() == inverse_letter(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

Word multiply(const Word& u, const Word& v) {
  Word out = u;
  out += v;
  return reduce(out);
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(inverse_letter(*it));
  return out;
}

int parity(const Word& w) { return static_cast<int>(reduce(w).size() % 2); }

std::vector<Word> enumerate_reduced_words(int max_length) {
  std::vector<Word> words{Word()};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = words.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (char c : {'X', 'Y', 'x', 'y'}) {
        if (!words[i].empty() && words[i].back() == inverse_letter(c)) continue;
        Word next = words[i];
        next.push_back(c);
        words.push_back(std::move(next));
      }
    }
    layer_begin = layer_end;
  }
  return words;
}

}  // namespace bulab::freegroup
