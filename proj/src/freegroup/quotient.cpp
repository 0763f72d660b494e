#include "bulab/freegroup/quotient.hpp"

#include <algorithm>
#include <deque>

#include "bulab/errors.hpp"

namespace bulab::freegroup {

Permutation QuotientMap::evaluate(const Word& w) const {
  if (!is_reduced(w)) throw InvalidValueError("word is not reduced");
  Permutation acc = Permutation::identity(degree());
  for (char c : w) {
    switch (c) {
      case 'x': acc = acc * image_of_x; break;
      case 'X': acc = acc * image_of_x.inverse(); break;
      case 'y': acc = acc * image_of_y; break;
      case 'Y': acc = acc * image_of_y.inverse(); break;
    }
  }
  return acc;
}

bool QuotientMap::in_stabilizer(const Word& w, int basepoint) const {
  return evaluate(w)(basepoint) == basepoint;
}

std::vector<int> QuotientMap::orbit(int basepoint) const {
  std::vector<char> seen(degree(), 0);
  std::deque<int> queue{basepoint};
  seen[basepoint] = 1;
  std::vector<int> out;
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    out.push_back(s);
    for (const Permutation* p : {&image_of_x, &image_of_y}) {
      for (int t : {(*p)(s), p->inverse()(s)}) {
        if (!seen[t]) {
          seen[t] = 1;
          queue.push_back(t);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuotientMap build_cover_automaton() {
  return QuotientMap{Permutation::transposition(3, 0, 1),
                     Permutation::transposition(3, 0, 2)};
}

PartitionSpec::PartitionSpec(QuotientMap quotient)
    : quotient_(std::move(quotient)) {
  // Close the generator images into the full image group, identity first.
  elements_.push_back(Permutation::identity(quotient_.degree()));
  index_.emplace(elements_[0], 0);
  const std::vector<Permutation> generators = {
      quotient_.image_of_x, quotient_.image_of_x.inverse(),
      quotient_.image_of_y, quotient_.image_of_y.inverse()};
  std::deque<Permutation> queue{elements_[0]};
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (const Permutation& g : generators) {
      Permutation next = g * p;
      if (index_.emplace(next, static_cast<int>(elements_.size())).second) {
        elements_.push_back(next);
        queue.push_back(next);
      }
    }
  }

  table_.assign(class_count(), std::vector<int>(class_count()));
  for (int a = 0; a < class_count(); ++a)
    for (int b = 0; b < class_count(); ++b)
      table_[a][b] = index_.at(elements_[a] * elements_[b]);
}

int PartitionSpec::class_of(const Permutation& p) const {
  const auto it = index_.find(p);
  if (it == index_.end())
    throw InvalidValueError("permutation is outside the image group");
  return it->second;
}

int PartitionSpec::class_of(const Word& w) const {
  return class_of(quotient_.evaluate(w));
}

int PartitionSpec::inverse_class(int a) const {
  return index_.at(elements_[a].inverse());
}

PartitionSpec build_s3_partition() {
  return PartitionSpec(build_cover_automaton());
}

PartitionSpec build_parity_partition() {
  return PartitionSpec(QuotientMap{Permutation::transposition(2, 0, 1),
                                   Permutation::transposition(2, 0, 1)});
}

}  // namespace bulab::freegroup
