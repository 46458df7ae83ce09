#include "altruns/statistics.hpp"

#include "altruns/error.hpp"

namespace altruns {

namespace {

// Direction changes of seq at interior indices.
int direction_changes(const int* seq, std::size_t len) noexcept {
  int changes = 0;
  for (std::size_t i = 1; i + 1 < len; ++i) {
    const bool peak = seq[i - 1] < seq[i] && seq[i] > seq[i + 1];
    const bool valley = seq[i - 1] > seq[i] && seq[i] < seq[i + 1];
    changes += peak || valley;
  }
  return changes;
}

}  // namespace

int altruns_a(Window pi) {
  for (int v : pi) {
    if (v < 0) throw Error(Errc::negative_entry, "altruns_a needs an ordinary permutation");
  }
  return 1 + direction_changes(pi.data(), pi.size());
}

int altruns_b(Window pi) noexcept {
  // Sentinel pi_0 = 0 only matters for the change at i = 1.
  int changes = direction_changes(pi.data(), pi.size());
  if (pi.size() >= 2) {
    const bool peak = 0 < pi[0] && pi[0] > pi[1];
    const bool valley = 0 > pi[0] && pi[0] < pi[1];
    changes += peak || valley;
  }
  return 1 + changes;
}

int inv_a(Window pi) noexcept {
  int count = 0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j) count += pi[i] > pi[j];
  return count;
}

int neg_sum_pairs(Window pi) noexcept {
  int count = 0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j) count += -pi[i] > pi[j];
  return count;
}

int inv_b(Window pi) noexcept { return inv_a(pi) + neg_sum_pairs(pi) + negs_count(pi); }

int inv_d(Window pi) noexcept { return inv_a(pi) + neg_sum_pairs(pi); }

}  // namespace altruns
