#include "altruns/group_action.hpp"

#include <algorithm>

#include "altruns/error.hpp"
#include "altruns/statistics.hpp"

namespace altruns {

namespace {

void check_index(int index, int n, const char* what) {
  if (index < 1 || index > n) {
    throw Error(Errc::index_out_of_range, std::string(what) + " index " + std::to_string(index) +
                                              " outside 1.." + std::to_string(n));
  }
}

}  // namespace

SignedPermutation sgn_flip(const SignedPermutation& pi, int k) {
  check_index(k, pi.size(), "sgn_flip");
  std::vector<int> values = pi.values();
  sgn_flip_in_place(values, k);
  return SignedPermutation::make_checked(std::move(values));
}

GeneratorSet generator_set(int n) {
  GeneratorSet g{n, {}};
  if (n < 3) return g;
  for (int p = (n % 2 == 0) ? 3 : 2; p <= n - 1; p += 2) g.positions.push_back(p);
  return g;
}

bool is_orbit_closed(ClassSelector selector, const GeneratorSet& generators) noexcept {
  const bool touches_first =
      std::find(generators.positions.begin(), generators.positions.end(), 1) !=
      generators.positions.end();
  if (selector.first_sign != FirstSign::any && touches_first) return false;

  const bool needs_even_flips =
      selector.group != Group::B || selector.length_parity != LengthParity::any;
  if (needs_even_flips) {
    for (int p : generators.positions) {
      if ((generators.n - p + 1) % 2 != 0) return false;
    }
  }
  return true;
}

bool is_canonical(Window pi, const GeneratorSet& generators) noexcept {
  for (int p : generators.positions) {
    if (pi[static_cast<std::size_t>(p - 1)] < 0) return false;
  }
  return true;
}

Canonical canonicalize(const SignedPermutation& pi, const GeneratorSet& generators) {
  std::vector<int> values = pi.values();
  std::vector<int> flips;
  for (int p : generators.positions) {
    if (values[static_cast<std::size_t>(p - 1)] < 0) {
      sgn_flip_in_place(values, p);
      flips.push_back(p);
    }
  }
  return {SignedPermutation::make_checked(std::move(values)), std::move(flips)};
}

std::vector<SignedPermutation> orbit(const SignedPermutation& pi, const GeneratorSet& generators) {
  const int m = generators.m();
  if (m > kMaxMaterializedOrbitRank) {
    throw Error(Errc::resource_cap, "orbit of rank " + std::to_string(m) + " is too large to materialize");
  }
  std::vector<SignedPermutation> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    std::vector<int> values = pi.values();
    for (int b = 0; b < m; ++b) {
      if ((subset >> b) & 1u) sgn_flip_in_place(values, generators.positions[static_cast<std::size_t>(b)]);
    }
    out.push_back(SignedPermutation::make_checked(std::move(values)));
  }
  return out;
}

IntPolynomial OrbitSummary::polynomial() const {
  return times_one_plus_t_power(IntPolynomial::monomial(static_cast<std::size_t>(min_runs)),
                                static_cast<unsigned>(m));
}

int orbit_min_runs(Window rep, const GeneratorSet& generators, std::span<int> scratch) noexcept {
  // Each generator moves altruns_B by exactly +-1 independently of the
  // others, so the orbit minimum drops one run per lowering generator.
  const int runs = altruns_b(rep);
  int lowering = 0;
  for (int p : generators.positions) {
    std::copy(rep.begin(), rep.end(), scratch.begin());
    sgn_flip_in_place(scratch, p);
    lowering += altruns_b(scratch) == runs - 1;
  }
  return runs - lowering;
}

OrbitSummary orbit_min_runs(const SignedPermutation& rep, const GeneratorSet& generators) {
  if (!is_canonical(rep, generators)) {
    throw Error(Errc::not_canonical, format_window(rep) + " is negative at a generator position");
  }
  std::vector<int> scratch(static_cast<std::size_t>(rep.size()));
  return {rep, orbit_min_runs(rep.window(), generators, scratch), generators.m()};
}

SignedPermutation bona_complement(const SignedPermutation& pi, int i) {
  check_index(i, pi.size(), "bona_complement");
  std::vector<int> values = pi.values();
  const auto suffix_begin = values.begin() + (i - 1);
  std::vector<int> sorted(suffix_begin, values.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto it = suffix_begin; it != values.end(); ++it) {
    const auto rank = std::lower_bound(sorted.begin(), sorted.end(), *it) - sorted.begin();
    *it = sorted[sorted.size() - 1 - static_cast<std::size_t>(rank)];
  }
  return SignedPermutation::make_checked(std::move(values));
}

}  // namespace altruns
