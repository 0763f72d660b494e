#include "bulab/freegroup/permutation.hpp"

#include "bulab/errors.hpp"

namespace bulab::freegroup {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw InvalidValueError("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p = identity(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw IncompatibleError("permutation degrees differ");
  std::vector<int> images(degree());
  for (int s = 0; s < degree(); ++s) images[s] = images_[rhs.images_[s]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(degree());
  for (int s = 0; s < degree(); ++s) images[images_[s]] = s;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int s = 0; s < degree(); ++s)
    if (images_[s] != s) return false;
  return true;
}

int Permutation::order() const {
  Permutation p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = *this * p;
    ++k;
  }
  return k;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    int s = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(s);
      seen[s] = 1;
      s = images_[s];
      first = false;
    } while (s != start);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace bulab::freegroup
