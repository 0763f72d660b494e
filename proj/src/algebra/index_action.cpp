#include "bulab/algebra/index_action.hpp"

#include <numeric>

#include "bulab/errors.hpp"

namespace bulab::algebra {

IndexAction IndexAction::from_permutation(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v])
      throw InvalidValueError("index action is not a bijection");
    seen[v] = 1;
  }

  // Order = lcm of cycle lengths.
  std::fill(seen.begin(), seen.end(), 0);
  long long order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = images[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
    if (order > 1'000'000'000LL)
      throw InvalidValueError("index action order overflow");
  }
  return IndexAction(std::move(images), static_cast<int>(order));
}

IndexAction IndexAction::identity(int size) {
  std::vector<int> images(size);
  for (int i = 0; i < size; ++i) images[i] = i;
  return IndexAction(std::move(images), 1);
}

bool IndexAction::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

}  // namespace bulab::algebra
