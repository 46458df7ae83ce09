#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "altruns/group_action.hpp"
#include "altruns/perm.hpp"
#include "altruns/polynomial.hpp"

namespace altruns {

enum class Backend { brute, orbit };

std::string_view to_string(Backend backend) noexcept;
Backend parse_backend(std::string_view token);

/// One slice of a class stream. Shards split the n! absolute-value
/// arrangements into contiguous rank blocks; every sign pattern of an
/// arrangement lands in the same shard.
struct ShardSpec {
  std::uint64_t index = 0;
  std::uint64_t count = 1;
};

/// Throws Error{bad_shard_spec}.
void validate(const ShardSpec& shard);

/// Default caps keep accidental runs short; both can be overridden.
struct EngineLimits {
  int brute_max_n = 10;
  int orbit_max_n = 12;
};

/// Windows are stored in std::uint64_t sign masks and arrangements are
/// ranked in std::uint64_t, which bounds n regardless of overrides.
inline constexpr int kHardMaxN = 20;

struct EnumerationJob {
  int n = 1;
  Family family = ClassSelector{};
  Backend backend = Backend::brute;
  ShardSpec shard{};
};

struct RunResult {
  IntPolynomial polynomial;
  std::uint64_t visited = 0;  // class members (brute) or transversal members (orbit) touched
};

struct RunOptions {
  unsigned jobs = 1;
  /// Number of shards; 0 means one shard per job.
  std::uint64_t shards = 0;
  EngineLimits limits{};
  /// Orbit backend: re-test membership on one non-representative orbit
  /// member per representative and throw std::logic_error on mismatch.
  bool check_orbit_membership = false;
};

std::uint64_t factorial(int n);

/// Arrangement ranks [first, last) owned by `shard`.
std::pair<std::uint64_t, std::uint64_t> shard_rank_range(int n, const ShardSpec& shard);

/// The permutation of 1..n with the given lexicographic rank.
std::vector<int> unrank_arrangement(int n, std::uint64_t rank);

namespace detail {

/// Sign masks use bit n-1-i for window index i, so counting masks upward
/// visits sign patterns lexicographically with + before -.
inline std::uint64_t position_bit(int n, int position) noexcept {
  return std::uint64_t{1} << (n - position);
}

inline void apply_signs(std::span<const int> arrangement, std::uint64_t mask,
                        std::span<int> out) noexcept {
  const int n = static_cast<int>(arrangement.size());
  for (int i = 0; i < n; ++i) {
    out[i] = (mask >> (n - 1 - i)) & 1u ? -arrangement[i] : arrangement[i];
  }
}

/// Walks arrangements of 1..n with ranks in [first, last).
template <class Fn>
void for_each_arrangement(int n, std::uint64_t first, std::uint64_t last, Fn&& fn) {
  if (first >= last) return;
  std::vector<int> arrangement = unrank_arrangement(n, first);
  for (std::uint64_t rank = first; rank < last; ++rank) {
    fn(std::span<const int>(arrangement));
    std::next_permutation(arrangement.begin(), arrangement.end());
  }
}

/// Sign masks allowed by the first-sign constraint, as (fixed bits, free bits).
inline std::pair<std::uint64_t, std::uint64_t> first_sign_masks(int n, FirstSign sign) noexcept {
  const std::uint64_t all = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t first = position_bit(n, 1);
  switch (sign) {
    case FirstSign::positive: return {0, all & ~first};
    case FirstSign::negative: return {first, all & ~first};
    case FirstSign::any: break;
  }
  return {0, all};
}

/// Submasks of `free` in increasing order, each OR-ed with `fixed`.
template <class Fn>
void for_each_submask(std::uint64_t fixed, std::uint64_t free, Fn&& fn) {
  std::uint64_t sub = 0;
  while (true) {
    fn(fixed | sub);
    if (sub == free) break;
    sub = ((sub | ~free) + 1) & free;
  }
}

}  // namespace detail

/// Visits each member of the class exactly once, ordered by (arrangement
/// rank, sign pattern). The window passed to `visit` is only valid for the
/// duration of the call.
template <class Visitor>
void for_each_in_class(int n, ClassSelector selector, const ShardSpec& shard, Visitor&& visit) {
  const auto [first, last] = shard_rank_range(n, shard);
  const auto [fixed, free] = detail::first_sign_masks(n, selector.first_sign);
  std::vector<int> window(static_cast<std::size_t>(n));
  detail::for_each_arrangement(n, first, last, [&](std::span<const int> arrangement) {
    detail::for_each_submask(fixed, free, [&](std::uint64_t mask) {
      detail::apply_signs(arrangement, mask, window);
      if (in_class(window, selector)) visit(Window(window));
    });
  });
}

/// Visits the members of the class that are positive at every generator
/// position, in the same order as for_each_in_class.
template <class Visitor>
void for_each_transversal(int n, ClassSelector selector, const GeneratorSet& generators,
                          const ShardSpec& shard, Visitor&& visit) {
  const auto [first, last] = shard_rank_range(n, shard);
  auto [fixed, free] = detail::first_sign_masks(n, selector.first_sign);
  for (int p : generators.positions) free &= ~detail::position_bit(n, p);
  std::vector<int> window(static_cast<std::size_t>(n));
  detail::for_each_arrangement(n, first, last, [&](std::span<const int> arrangement) {
    detail::for_each_submask(fixed, free, [&](std::uint64_t mask) {
      detail::apply_signs(arrangement, mask, window);
      if (in_class(window, selector)) visit(Window(window));
    });
  });
}

/// Ordinary permutations of 1..n in lexicographic order.
template <class Visitor>
void for_each_permutation(int n, const ShardSpec& shard, Visitor&& visit) {
  const auto [first, last] = shard_rank_range(n, shard);
  detail::for_each_arrangement(n, first, last,
                               [&](std::span<const int> arrangement) { visit(Window(arrangement)); });
}

/// Materialized class (small n only).
std::vector<SignedPermutation> enumerate_class(int n, ClassSelector selector,
                                               const ShardSpec& shard = {});

/// Runs one shard of a job. Throws Error{resource_cap | bad_shard_spec |
/// selector_not_orbit_closed | precondition_violated}.
RunResult run_shard(const EnumerationJob& job, const RunOptions& options = {});

/// Splits the job into shards, runs them on `options.jobs` threads and folds
/// the per-shard results in shard order.
RunResult run_polynomial(int n, const Family& family, Backend backend,
                         const RunOptions& options = {});

/// Sum of t^altruns over the class (altruns_A for TypeA, altruns_B otherwise).
IntPolynomial run_polynomial_bruteforce(int n, const Family& family, const RunOptions& options = {});

/// Orbit-factored sum: one t^a (1+t)^m per transversal member of the class.
IntPolynomial run_polynomial_orbit(int n, ClassSelector selector, const RunOptions& options = {});

}  // namespace altruns
