#pragma once

#include <span>
#include <vector>

#include "altruns/perm.hpp"
#include "altruns/polynomial.hpp"

namespace altruns {

/// Negates pi_k, ..., pi_n. Defined for every 1 <= k <= n.
/// Throws Error{index_out_of_range}.
SignedPermutation sgn_flip(const SignedPermutation& pi, int k);

/// In-place variant for enumeration loops; k is not range checked.
inline void sgn_flip_in_place(std::span<int> window, int k) noexcept {
  for (std::size_t i = static_cast<std::size_t>(k - 1); i < window.size(); ++i) {
    window[i] = -window[i];
  }
}

/// Positions whose sign flips generate the Z_2^m action on B_n:
///   n even: {3, 5, ..., n-1}
///   n odd:  {2, 4, ..., n-1}
/// Each generator negates n - p + 1 entries, an even number, and position 1
/// is never touched.
struct GeneratorSet {
  int n = 0;
  std::vector<int> positions;

  int m() const noexcept { return static_cast<int>(positions.size()); }
  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

GeneratorSet generator_set(int n);

/// True when the membership predicate of `selector` is constant on every
/// orbit of the action generated by `generators`: a first-sign constraint
/// needs position 1 untouched, and a group or length-parity constraint needs
/// every generator to flip an even number of entries.
bool is_orbit_closed(ClassSelector selector, const GeneratorSet& generators) noexcept;

struct Canonical {
  SignedPermutation representative;
  std::vector<int> flips_applied;
};

/// Transversal element of pi's orbit: the unique orbit member that is
/// positive at every generator position. Built by scanning the positions left
/// to right and flipping wherever the current entry is negative.
Canonical canonicalize(const SignedPermutation& pi, const GeneratorSet& generators);
bool is_canonical(Window pi, const GeneratorSet& generators) noexcept;

/// Maximum m for which orbit() will materialize 2^m elements.
inline constexpr int kMaxMaterializedOrbitRank = 20;

/// All 2^m images of pi, indexed by generator subset (bit b of the index
/// selects positions[b]). Throws Error{resource_cap} when m exceeds
/// kMaxMaterializedOrbitRank.
std::vector<SignedPermutation> orbit(const SignedPermutation& pi, const GeneratorSet& generators);

struct OrbitSummary {
  SignedPermutation representative;
  int min_runs = 0;  // a
  int m = 0;

  /// t^a (1+t)^m
  IntPolynomial polynomial() const;
};

/// Minimum altruns_B over the orbit of a canonical representative, obtained
/// by counting the generators that lower the run count of `rep`.
/// Throws Error{not_canonical}.
OrbitSummary orbit_min_runs(const SignedPermutation& rep, const GeneratorSet& generators);

/// Same computation on a raw window; `scratch` must have the window's size.
/// No canonicity check.
int orbit_min_runs(Window rep, const GeneratorSet& generators, std::span<int> scratch) noexcept;

/// Bona's complementation c_i: within the suffix pi_i..pi_n, the p-th
/// smallest value is replaced by the p-th largest. Throws
/// Error{index_out_of_range}.
SignedPermutation bona_complement(const SignedPermutation& pi, int i);

}  // namespace altruns
