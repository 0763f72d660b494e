#include "bulab/freegroup/group_algebra.hpp"

#include <algorithm>
#include <random>

#include "bulab/errors.hpp"
#include "bulab/tolerances.hpp"

namespace bulab::freegroup {

GroupAlgebraElement GroupAlgebraElement::delta(const Word& w, Complex c) {
  GroupAlgebraElement e;
  e.add(w, c);
  return e;
}

void GroupAlgebraElement::add(const Word& w, Complex c) {
  if (!is_reduced(w)) throw InvalidValueError("word is not reduced: " + w);
  const auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) it->second += c;
  if (it->second == Complex(0.0)) terms_.erase(it);
}

double GroupAlgebraElement::l1_norm() const {
  double s = 0.0;
  for (const auto& [w, c] : terms_) s += std::abs(c);
  return s;
}

int GroupAlgebraElement::max_word_length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return static_cast<int>(m);
}

GroupAlgebraElement GroupAlgebraElement::adjoint() const {
  GroupAlgebraElement out;
  for (const auto& [w, c] : terms_) out.add(inverse(w), std::conj(c));
  return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(
    const GroupAlgebraElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& u,
                             const GroupAlgebraElement& v,
                             std::size_t term_cap) {
  if (term_cap == 0) term_cap = tol().convolution_term_cap;
  if (u.term_count() * v.term_count() > term_cap)
    throw ResourceError("convolution would touch " +
                        std::to_string(u.term_count() * v.term_count()) +
                        " term pairs; the cap is " + std::to_string(term_cap));
  GroupAlgebraElement out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms()) {
      out.add(multiply(wu, wv), cu * cv);
      if (out.term_count() > term_cap)
        throw ResourceError("convolution exceeded the term cap of " +
                            std::to_string(term_cap));
    }
  return out;
}

std::map<int, GroupAlgebraElement> homogeneous_components(
    const GroupAlgebraElement& a, const PartitionSpec& partition) {
  std::map<int, GroupAlgebraElement> out;
  for (const auto& [w, c] : a.terms())
    out[partition.class_of(w)].add(w, c);
  return out;
}

GroupAlgebraElement random_element(std::uint64_t seed, int max_terms,
                                   int max_length) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng]() {
    return 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
  };
  const auto pick = [&rng](int n) { return static_cast<int>(rng() % n); };

  GroupAlgebraElement a;
  const int terms = 1 + pick(max_terms);
  const char letters[4] = {'x', 'X', 'y', 'Y'};
  for (int t = 0; t < terms; ++t) {
    const int len = pick(max_length + 1);
    Word w;
    for (int k = 0; k < len; ++k) {
      char c;
      do {
        c = letters[pick(4)];
      } while (!w.empty() && c == inverse_letter(w.back()));
      w.push_back(c);
    }
    a.add(w, Complex(uniform(), uniform()));
  }
  return a;
}

}  // namespace bulab::freegroup
