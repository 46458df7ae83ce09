#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "altruns/enumerate.hpp"
#include "altruns/perm.hpp"
#include "altruns/polynomial.hpp"

namespace altruns {

/// Outcome of one named check. A failed report always carries a witness or
/// a "discrepancy" entry in `details`.
struct VerificationReport {
  std::string check_name;
  std::map<std::string, std::string> parameters;
  bool passed = true;
  std::map<std::string, std::string> details;
  std::vector<SignedPermutation> witness;
};

struct VerifyOptions {
  RunOptions run{};
  /// Above this n the sign-flip properties are checked on random samples.
  int lemma_exhaustive_max_n = 7;
  std::uint64_t lemma_samples = 200000;
  std::uint64_t seed = 0;
};

/// Check names accepted by Verifier::run_check and the CLI.
inline constexpr const char* kCheckNames[] = {
    "lemmas", "orbit-gf", "inv-relation", "parity", "divisibility", "moments", "symmetries", "bona",
};

/// Runs the checks and memoizes class polynomials, so that divisibility,
/// moment and symmetry checks at the same n share one enumeration per class
/// and backend. Safe to call from several threads.
class Verifier {
 public:
  explicit Verifier(VerifyOptions options = {});

  /// Involution and commutation of every sign flip, the +-1 run change for
  /// 2 <= i <= n-1, and run-change consistency between generator pairs.
  VerificationReport check_lemmas_action(int n);
  /// Every orbit of B_n^> has generating function t^a (1+t)^m and a unique
  /// run-minimizing member.
  VerificationReport check_orbit_gf(int n);
  /// inv_B = inv_D + negs on all of B_n.
  VerificationReport check_inv_relation(int n);
  /// Generator flips preserve the parities of inv_B, inv_D and negs, while a
  /// single-entry flip changes the parity of inv_B.
  VerificationReport check_parity_preservation(int n);
  /// (1+t)-order of the class polynomial against floor((n-1)/2), or
  /// floor((n-2)/2) for type A. Both backends are run when available.
  VerificationReport check_divisibility(int n, const Family& family);
  /// Throws Error{precondition_violated} when n < 2k+3.
  VerificationReport check_moments(int n, unsigned k, ClassSelector selector);
  VerificationReport check_symmetries(int n);
  VerificationReport check_bona_remark();

  /// Every check for 1 <= n <= n_max over the standard selectors.
  std::vector<VerificationReport> run_all(int n_max);

  /// Memoized class polynomial.
  RunResult polynomial(int n, const Family& family, Backend backend);

  const VerifyOptions& options() const noexcept { return options_; }

 private:
  VerifyOptions options_;
  std::mutex cache_mutex_;
  std::map<std::string, RunResult> cache_;
};

bool all_passed(std::span<const VerificationReport> reports) noexcept;

/// Fixed-width table, one row per report.
std::string render_table(std::span<const VerificationReport> reports);

}  // namespace altruns
