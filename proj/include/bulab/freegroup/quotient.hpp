#pragma once

#include <map>
#include <vector>

#include "bulab/freegroup/permutation.hpp"
#include "bulab/freegroup/word.hpp"

namespace bulab::freegroup {

// A homomorphism from the free group on x, y into a symmetric group, given
// by the generator images. Words evaluate multiplicatively; inverse letters
// map to inverse permutations.
struct QuotientMap {
  Permutation image_of_x;
  Permutation image_of_y;

  int degree() const { return image_of_x.degree(); }

  Permutation evaluate(const Word& w) const;

  // Lift-is-a-loop membership: w stabilizes the basepoint sheet iff its
  // lift to the cover starting there closes up.
  bool in_stabilizer(const Word& w, int basepoint = 0) const;

  // Orbit of a sheet under the image group; its size is the subgroup index.
  std::vector<int> orbit(int basepoint = 0) const;
};

// The fixed 3-sheet cover of the wedge of two circles: sheets {0, 1, 2},
// x acting as (0 1) and y as (0 2). The stabilizer of sheet 0 is an index-3
// subgroup that misses the commutator yxYX, whose image is a 3-cycle.
QuotientMap build_cover_automaton();

// Partition of the free group into classes indexed by the image group of a
// quotient map. Class multiplication mirrors word multiplication, which is
// exactly the partition axiom.
class PartitionSpec {
 public:
  explicit PartitionSpec(QuotientMap quotient);

  const QuotientMap& quotient() const { return quotient_; }

  int class_count() const { return static_cast<int>(elements_.size()); }
  int identity_class() const { return 0; }

  int class_of(const Word& w) const;
  int class_of(const Permutation& p) const;
  int compose(int a, int b) const { return table_[a][b]; }
  int inverse_class(int a) const;

  const Permutation& element(int c) const { return elements_[c]; }
  std::string class_name(int c) const { return elements_[c].cycle_string(); }

 private:
  QuotientMap quotient_;
  std::vector<Permutation> elements_;  // image group, identity first
  std::map<Permutation, int> index_;
  std::vector<std::vector<int>> table_;
};

// Classes = all of S_3 via the cover automaton.
PartitionSpec build_s3_partition();

// Classes = Z_2 via word parity (both generators map to the same
// transposition, so the class is the reduced length mod 2).
PartitionSpec build_parity_partition();

}  // namespace bulab::freegroup
