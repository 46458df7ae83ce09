#pragma once

#include "altruns/perm.hpp"

namespace altruns {

// All statistics are direct scans of the window: O(n) for runs, O(n^2) for
// inversions.

/// Alternating runs of an ordinary permutation (direction changes at
/// 2 <= i <= n-1, no sentinel). Throws Error{negative_entry}.
int altruns_a(Window pi);

/// Alternating runs of 0, pi_1, ..., pi_n (direction changes at 1..n-1).
int altruns_b(Window pi) noexcept;

/// Type D uses the type B count unchanged.
inline int altruns_d(Window pi) noexcept { return altruns_b(pi); }

/// |{i < j : pi_i > pi_j}|
int inv_a(Window pi) noexcept;

/// |{i < j : -pi_i > pi_j}|
int neg_sum_pairs(Window pi) noexcept;

/// Type B length: inv_a + neg_sum_pairs + negs_count.
int inv_b(Window pi) noexcept;

/// Type D length: inv_a + neg_sum_pairs. Evaluated for any signed
/// permutation, not only those with an even number of negatives.
int inv_d(Window pi) noexcept;

}  // namespace altruns
