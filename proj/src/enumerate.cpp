#include "altruns/enumerate.hpp"

#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "altruns/error.hpp"
#include "altruns/statistics.hpp"

namespace altruns {

std::string_view to_string(Backend backend) noexcept {
  return backend == Backend::brute ? "brute" : "orbit";
}

Backend parse_backend(std::string_view token) {
  if (token == "brute") return Backend::brute;
  if (token == "orbit") return Backend::orbit;
  throw Error(Errc::parse_error, "unknown backend '" + std::string(token) + "'");
}

void validate(const ShardSpec& shard) {
  if (shard.count < 1 || shard.index >= shard.count) {
    throw Error(Errc::bad_shard_spec, "shard " + std::to_string(shard.index) + " of " +
                                          std::to_string(shard.count));
  }
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > kHardMaxN) throw Error(Errc::resource_cap, "factorial of " + std::to_string(n));
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::pair<std::uint64_t, std::uint64_t> shard_rank_range(int n, const ShardSpec& shard) {
  validate(shard);
  const unsigned __int128 total = factorial(n);
  const auto first = static_cast<std::uint64_t>(total * shard.index / shard.count);
  const auto last = static_cast<std::uint64_t>(total * (shard.index + 1) / shard.count);
  return {first, last};
}

std::vector<int> unrank_arrangement(int n, std::uint64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int remaining = n; remaining > 0; --remaining) {
    const std::uint64_t block = factorial(remaining - 1);
    const auto digit = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

std::vector<SignedPermutation> enumerate_class(int n, ClassSelector selector, const ShardSpec& shard) {
  if (n < 1) throw Error(Errc::precondition_violated, "n must be positive");
  std::vector<SignedPermutation> out;
  for_each_in_class(n, selector, shard, [&](Window w) {
    out.push_back(SignedPermutation::make_checked({w.begin(), w.end()}));
  });
  return out;
}

namespace {

IntPolynomial from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(counts.size());
  for (std::uint64_t c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(coeffs));
}

void check_n(int n, int cap, std::string_view backend) {
  if (n < 1) throw Error(Errc::precondition_violated, "n must be positive");
  if (n > cap || n > kHardMaxN) {
    throw Error(Errc::resource_cap, "n = " + std::to_string(n) + " exceeds the " +
                                        std::string(backend) + " cap of " +
                                        std::to_string(std::min(cap, kHardMaxN)));
  }
}

RunResult run_brute(int n, const Family& family, const ShardSpec& shard) {
  // Per-shard counts stay far below 2^64; they are widened when merged.
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 2, 0);
  std::uint64_t visited = 0;
  if (std::holds_alternative<TypeA>(family)) {
    for_each_permutation(n, shard, [&](Window w) {
      ++counts[static_cast<std::size_t>(altruns_a(w))];
      ++visited;
    });
  } else {
    for_each_in_class(n, std::get<ClassSelector>(family), shard, [&](Window w) {
      ++counts[static_cast<std::size_t>(altruns_b(w))];
      ++visited;
    });
  }
  return {from_counts(counts), visited};
}

RunResult run_orbit(int n, ClassSelector selector, const ShardSpec& shard, bool check_membership) {
  const GeneratorSet generators = generator_set(n);
  if (!is_orbit_closed(selector, generators)) {
    throw Error(Errc::selector_not_orbit_closed, to_token(selector));
  }
  std::vector<std::uint64_t> reps_by_min(static_cast<std::size_t>(n) + 2, 0);
  std::vector<int> scratch(static_cast<std::size_t>(n));
  std::uint64_t visited = 0;
  for_each_transversal(n, selector, generators, shard, [&](Window rep) {
    if (check_membership && generators.m() > 0) {
      std::copy(rep.begin(), rep.end(), scratch.begin());
      sgn_flip_in_place(scratch, generators.positions.front());
      if (!in_class(scratch, selector)) {
        throw std::logic_error("orbit of " + format_window(rep) + " leaves class " + to_token(selector));
      }
    }
    ++reps_by_min[static_cast<std::size_t>(orbit_min_runs(rep, generators, scratch))];
    ++visited;
  });
  return {times_one_plus_t_power(from_counts(reps_by_min), static_cast<unsigned>(generators.m())),
          visited};
}

}  // namespace

RunResult run_shard(const EnumerationJob& job, const RunOptions& options) {
  validate(job.shard);
  if (job.backend == Backend::brute) {
    check_n(job.n, options.limits.brute_max_n, "brute-force");
    return run_brute(job.n, job.family, job.shard);
  }
  if (std::holds_alternative<TypeA>(job.family)) {
    throw Error(Errc::selector_not_orbit_closed, "the sign-flip action does not act on type A");
  }
  check_n(job.n, options.limits.orbit_max_n, "orbit");
  return run_orbit(job.n, std::get<ClassSelector>(job.family), job.shard,
                   options.check_orbit_membership);
}

RunResult run_polynomial(int n, const Family& family, Backend backend, const RunOptions& options) {
  const std::uint64_t shard_count =
      options.shards ? options.shards : std::max<std::uint64_t>(1, options.jobs);
  const auto job_for = [&](std::uint64_t index) {
    return EnumerationJob{n, family, backend, ShardSpec{index, shard_count}};
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, options.jobs), shard_count));
  std::vector<RunResult> partial(static_cast<std::size_t>(shard_count));
  if (threads <= 1) {
    for (std::uint64_t s = 0; s < shard_count; ++s) partial[s] = run_shard(job_for(s), options);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::uint64_t s = next++; s < shard_count; s = next++) {
            partial[s] = run_shard(job_for(s), options);
          }
        } catch (...) {
          errors[t] = std::current_exception();
          next = shard_count;
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  RunResult total;
  for (const auto& r : partial) {
    total.polynomial += r.polynomial;
    total.visited += r.visited;
  }
  return total;
}

IntPolynomial run_polynomial_bruteforce(int n, const Family& family, const RunOptions& options) {
  return run_polynomial(n, family, Backend::brute, options).polynomial;
}

IntPolynomial run_polynomial_orbit(int n, ClassSelector selector, const RunOptions& options) {
  return run_polynomial(n, selector, Backend::orbit, options).polynomial;
}

}  // namespace altruns
