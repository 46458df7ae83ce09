#include "altruns/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "altruns/error.hpp"
#include "altruns/group_action.hpp"
#include "altruns/statistics.hpp"

namespace altruns {

namespace {

constexpr ClassSelector kAllOfB{Group::B, FirstSign::any, LengthParity::any};
constexpr ClassSelector kFirstPositive{Group::B, FirstSign::positive, LengthParity::any};

VerificationReport make_report(std::string name, std::map<std::string, std::string> params) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.parameters = std::move(params);
  return r;
}

SignedPermutation to_perm(Window w) { return SignedPermutation::make_checked({w.begin(), w.end()}); }

// Records the first failure only; later ones would repeat the same story.
void fail(VerificationReport& r, std::string discrepancy, std::vector<SignedPermutation> witness = {}) {
  if (!r.passed) return;
  r.passed = false;
  r.details["discrepancy"] = std::move(discrepancy);
  r.witness = std::move(witness);
}

std::string poly_str(const IntPolynomial& f) {
  std::string s = "[";
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i].get_str();
  }
  return s + "]";
}

void check_exhaustive_cap(int n, const VerifyOptions& options) {
  if (n < 1) throw Error(Errc::precondition_violated, "n must be positive");
  if (n > options.run.limits.brute_max_n || n > kHardMaxN) {
    throw Error(Errc::resource_cap, "exhaustive pass over B_" + std::to_string(n) +
                                        " exceeds the brute-force cap");
  }
}

template <class Fn>
void for_each_signed(int n, Fn&& fn) {
  for_each_in_class(n, kAllOfB, ShardSpec{}, std::forward<Fn>(fn));
}

int parity(int x) { return x & 1; }

}  // namespace

Verifier::Verifier(VerifyOptions options) : options_(std::move(options)) {}

RunResult Verifier::polynomial(int n, const Family& family, Backend backend) {
  const std::string key = std::to_string(n) + "|" + to_token(family) + "|" + std::string(to_string(backend));
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  RunResult result = run_polynomial(n, family, backend, options_.run);
  std::lock_guard lock(cache_mutex_);
  return cache_.emplace(key, std::move(result)).first->second;
}

VerificationReport Verifier::check_lemmas_action(int n) {
  auto r = make_report("lemmas", {{"n", std::to_string(n)}});
  if (n < 1) throw Error(Errc::precondition_violated, "n must be positive");
  const GeneratorSet generators = generator_set(n);
  std::uint64_t elements = 0;
  std::uint64_t involution = 0, commutation = 0, run_change = 0, consistency = 0;

  std::vector<int> a(static_cast<std::size_t>(n)), b(a.size()), c(a.size());
  const auto flipped = [&](Window w, int k, std::vector<int>& out) {
    std::copy(w.begin(), w.end(), out.begin());
    sgn_flip_in_place(out, k);
  };

  const auto check_one = [&](Window w) {
    ++elements;
    for (int k = 1; k <= n; ++k) {
      flipped(w, k, a);
      sgn_flip_in_place(a, k);
      ++involution;
      if (!std::equal(a.begin(), a.end(), w.begin())) {
        fail(r, "involution fails at k=" + std::to_string(k), {to_perm(w)});
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        flipped(w, i, a);
        sgn_flip_in_place(a, j);
        flipped(w, j, b);
        sgn_flip_in_place(b, i);
        ++commutation;
        if (a != b) {
          fail(r, "flips at " + std::to_string(i) + " and " + std::to_string(j) + " do not commute",
               {to_perm(w)});
        }
      }
    }
    const int runs = altruns_b(w);
    for (int i = 2; i <= n - 1; ++i) {
      flipped(w, i, a);
      ++run_change;
      if (std::abs(altruns_b(a) - runs) != 1) {
        fail(r, "flip at " + std::to_string(i) + " changes altruns_B by " +
                    std::to_string(altruns_b(a) - runs),
             {to_perm(w), to_perm(a)});
      }
    }
    for (int i : generators.positions) {
      flipped(w, i, a);
      if (altruns_b(a) != runs + 1) continue;
      for (int j : generators.positions) {
        if (j == i) continue;
        flipped(w, j, b);
        c = b;
        sgn_flip_in_place(c, i);
        ++consistency;
        if (altruns_b(c) != altruns_b(b) + 1) {
          fail(r, "raising flip at " + std::to_string(i) + " stops raising after flip at " +
                      std::to_string(j),
               {to_perm(w)});
        }
      }
    }
  };

  if (n <= options_.lemma_exhaustive_max_n) {
    check_exhaustive_cap(n, options_);
    r.details["mode"] = "exhaustive";
    for_each_signed(n, check_one);
  } else {
    if (n > kHardMaxN) throw Error(Errc::resource_cap, "n exceeds " + std::to_string(kHardMaxN));
    r.details["mode"] = "sampled";
    r.parameters["seed"] = std::to_string(options_.seed);
    std::mt19937_64 rng(options_.seed);
    std::vector<int> w(static_cast<std::size_t>(n));
    for (std::uint64_t s = 0; s < options_.lemma_samples; ++s) {
      std::iota(w.begin(), w.end(), 1);
      std::shuffle(w.begin(), w.end(), rng);
      for (int& v : w)
        if (rng() & 1u) v = -v;
      check_one(w);
    }
  }
  r.details["elements"] = std::to_string(elements);
  r.details["involution_checks"] = std::to_string(involution);
  r.details["commutation_checks"] = std::to_string(commutation);
  r.details["run_change_checks"] = std::to_string(run_change);
  r.details["consistency_checks"] = std::to_string(consistency);
  return r;
}

VerificationReport Verifier::check_orbit_gf(int n) {
  auto r = make_report("orbit-gf", {{"n", std::to_string(n)}});
  check_exhaustive_cap(n, options_);
  const GeneratorSet generators = generator_set(n);
  const int m = generators.m();
  const std::size_t expected_size = std::size_t{1} << m;
  std::uint64_t orbits = 0, elements = 0;

  for_each_transversal(n, kFirstPositive, generators, ShardSpec{}, [&](Window w) {
    ++orbits;
    const SignedPermutation rep = to_perm(w);
    std::vector<SignedPermutation> members = orbit(rep, generators);
    elements += members.size();

    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (members.size() != expected_size ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(r, "orbit is not free", {rep});
    }

    IntPolynomial exact;
    int min_runs = n + 1, at_min = 0;
    for (const auto& pi : members) {
      if (!in_class(pi, kFirstPositive) || canonicalize(pi, generators).representative != rep) {
        fail(r, "orbit member leaves B_n^> or has a different representative", {rep, pi});
      }
      const int runs = altruns_b(pi);
      exact.add_term(static_cast<std::size_t>(runs), 1);
      if (runs < min_runs) {
        min_runs = runs;
        at_min = 1;
      } else if (runs == min_runs) {
        ++at_min;
      }
    }
    const OrbitSummary summary = orbit_min_runs(rep, generators);
    if (summary.min_runs != min_runs) {
      fail(r, "predicted minimum " + std::to_string(summary.min_runs) + " but orbit minimum is " +
                  std::to_string(min_runs),
           {rep});
    }
    if (exact != summary.polynomial()) {
      fail(r, "orbit polynomial " + to_string(exact) + " != " + to_string(summary.polynomial()), {rep});
    }
    if (at_min != 1) {
      fail(r, std::to_string(at_min) + " orbit members attain the minimum", {rep});
    }
  });

  // The orbits must exhaust B_n^>, whose size is 2^(n-1) n!.
  const BigInt class_size = BigInt(static_cast<unsigned long>(factorial(n))) << (n - 1);
  if (BigInt(static_cast<unsigned long>(elements)) != class_size) {
    fail(r, "orbits cover " + std::to_string(elements) + " elements, expected " + class_size.get_str());
  }
  r.details["m"] = std::to_string(m);
  r.details["orbit_size"] = std::to_string(expected_size);
  r.details["orbits"] = std::to_string(orbits);
  r.details["elements"] = std::to_string(elements);
  return r;
}

VerificationReport Verifier::check_inv_relation(int n) {
  auto r = make_report("inv-relation", {{"n", std::to_string(n)}});
  check_exhaustive_cap(n, options_);
  std::uint64_t elements = 0;
  for_each_signed(n, [&](Window w) {
    ++elements;
    if (inv_b(w) != inv_d(w) + negs_count(w)) {
      fail(r, "inv_B=" + std::to_string(inv_b(w)) + " inv_D=" + std::to_string(inv_d(w)) +
                  " negs=" + std::to_string(negs_count(w)),
           {to_perm(w)});
    }
  });
  r.details["elements"] = std::to_string(elements);
  return r;
}

VerificationReport Verifier::check_parity_preservation(int n) {
  auto r = make_report("parity", {{"n", std::to_string(n)}});
  check_exhaustive_cap(n, options_);
  const GeneratorSet generators = generator_set(n);
  std::vector<int> a(static_cast<std::size_t>(n));
  std::uint64_t elements = 0;
  for_each_signed(n, [&](Window w) {
    ++elements;
    const int b0 = parity(inv_b(w)), d0 = parity(inv_d(w)), g0 = parity(negs_count(w));
    for (int p : generators.positions) {
      std::copy(w.begin(), w.end(), a.begin());
      sgn_flip_in_place(a, p);
      if (parity(inv_b(a)) != b0 || parity(inv_d(a)) != d0 || parity(negs_count(a)) != g0) {
        fail(r, "generator flip at " + std::to_string(p) + " changes a parity", {to_perm(w), to_perm(a)});
      }
    }
    for (int i = 0; i < n; ++i) {
      std::copy(w.begin(), w.end(), a.begin());
      a[static_cast<std::size_t>(i)] = -a[static_cast<std::size_t>(i)];
      if (parity(inv_b(a)) == b0) {
        fail(r, "negating entry " + std::to_string(i + 1) + " keeps the inv_B parity",
             {to_perm(w), to_perm(a)});
      }
    }
  });
  r.details["elements"] = std::to_string(elements);
  r.details["generators"] = std::to_string(generators.m());
  return r;
}

VerificationReport Verifier::check_divisibility(int n, const Family& family) {
  auto r = make_report("divisibility", {{"n", std::to_string(n)}, {"class", to_token(family)}});
  if (n < 1) throw Error(Errc::precondition_violated, "n must be positive");
  const bool type_a = std::holds_alternative<TypeA>(family);
  const int expected = type_a ? std::max(0, (n - 2) / 2) : (n - 1) / 2;

  const bool brute_ok = n <= options_.run.limits.brute_max_n;
  const bool orbit_ok = !type_a && n <= options_.run.limits.orbit_max_n;
  if (!brute_ok && !orbit_ok) {
    throw Error(Errc::resource_cap, "n = " + std::to_string(n) + " exceeds every backend cap");
  }
  std::string backends;
  IntPolynomial f;
  if (brute_ok) {
    f = polynomial(n, family, Backend::brute).polynomial;
    backends = "brute";
  }
  if (orbit_ok) {
    const IntPolynomial g = polynomial(n, family, Backend::orbit).polynomial;
    if (brute_ok && g != f) {
      fail(r, "orbit backend " + poly_str(g) + " != brute force " + poly_str(f));
    }
    if (!brute_ok) f = g;
    backends += backends.empty() ? "orbit" : ",orbit";
  }
  r.parameters["backend"] = backends;
  r.details["coeffs"] = poly_str(f);
  r.details["cardinality"] = f.evaluate(1).get_str();
  r.details["expected_order"] = std::to_string(expected);
  if (f.is_zero()) {
    r.details["order"] = "infinite";
    return r;
  }
  const auto factored = factor_one_plus_t(f);
  r.details["order"] = std::to_string(factored.order);
  r.details["quotient"] = poly_str(factored.quotient);
  if (static_cast<int>(factored.order) < expected) {
    fail(r, "(1+t)-order " + std::to_string(factored.order) + " < " + std::to_string(expected));
  }
  return r;
}

VerificationReport Verifier::check_moments(int n, unsigned k, ClassSelector selector) {
  if (k < 1 || n < 2 * static_cast<int>(k) + 3) {
    throw Error(Errc::precondition_violated,
                "moment identity needs k >= 1 and n >= 2k+3 (n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + ")");
  }
  auto r = make_report("moments", {{"n", std::to_string(n)},
                                   {"k", std::to_string(k)},
                                   {"class", to_token(selector)}});
  const Backend backend = n <= options_.run.limits.brute_max_n ? Backend::brute : Backend::orbit;
  r.parameters["backend"] = std::string(to_string(backend));
  const IntPolynomial f = polynomial(n, selector, backend).polynomial;
  const MomentSums sums = moment_sums(f, k);
  r.details["odd_side"] = sums.odd_side.get_str();
  r.details["even_side"] = sums.even_side.get_str();
  if (!sums.holds()) {
    fail(r, "odd-indexed sum " + sums.odd_side.get_str() + " != even-indexed sum " +
                sums.even_side.get_str());
  }
  return r;
}

VerificationReport Verifier::check_symmetries(int n) {
  auto r = make_report("symmetries", {{"n", std::to_string(n)}});
  check_exhaustive_cap(n, options_);
  const auto poly = [&](Group g, FirstSign s) {
    return polynomial(n, ClassSelector{g, s, LengthParity::any}, Backend::brute).polynomial;
  };
  const IntPolynomial d_pos = poly(Group::D, FirstSign::positive);
  const IntPolynomial d_neg = poly(Group::D, FirstSign::negative);
  const IntPolynomial bd_pos = poly(Group::BminusD, FirstSign::positive);
  const IntPolynomial bd_neg = poly(Group::BminusD, FirstSign::negative);

  const bool even = n % 2 == 0;
  if (even) {
    if (d_neg != d_pos) fail(r, "R^{D,<} " + poly_str(d_neg) + " != R^{D,>} " + poly_str(d_pos));
    if (bd_neg != bd_pos) fail(r, "R^{B-D,<} " + poly_str(bd_neg) + " != R^{B-D,>} " + poly_str(bd_pos));
    // R^D = 2 R^{D,>}, so every coefficient of R^D is even.
    const IntPolynomial d_all = d_pos + d_neg;
    bool all_even = true;
    for (const auto& c : d_all.coeffs()) all_even = all_even && mpz_even_p(c.get_mpz_t());
    r.details["rd_even_coefficients"] = all_even ? "true" : "false";
    if (!all_even) fail(r, "R^D " + poly_str(d_all) + " has an odd coefficient");
  } else {
    if (d_neg != bd_pos) fail(r, "R^{D,<} " + poly_str(d_neg) + " != R^{B-D,>} " + poly_str(bd_pos));
    if (d_pos != bd_neg) fail(r, "R^{D,>} " + poly_str(d_pos) + " != R^{B-D,<} " + poly_str(bd_neg));
  }
  r.details["D_pos"] = poly_str(d_pos);
  r.details["D_neg"] = poly_str(d_neg);
  r.details["B-D_pos"] = poly_str(bd_pos);
  r.details["B-D_neg"] = poly_str(bd_neg);

  // Element level: flipping every sign swaps the first sign, keeps altruns_B,
  // and keeps (n even) or swaps (n odd) the negs parity.
  std::vector<int> image(static_cast<std::size_t>(n));
  std::uint64_t elements = 0;
  for_each_signed(n, [&](Window w) {
    ++elements;
    std::copy(w.begin(), w.end(), image.begin());
    sgn_flip_in_place(image, 1);
    const bool same_parity = parity(negs_count(w)) == parity(negs_count(image));
    if (altruns_b(image) != altruns_b(w) || same_parity != even || (w[0] > 0) == (image[0] > 0)) {
      fail(r, "sgn_flip at 1 does not map the classes onto each other", {to_perm(w), to_perm(image)});
    }
  });
  r.details["elements"] = std::to_string(elements);
  return r;
}

VerificationReport Verifier::check_bona_remark() {
  auto r = make_report("bona", {});
  const auto pi = SignedPermutation::make_checked({1, 2, -3, -4});
  const auto expected = SignedPermutation::make_checked({1, 2, -4, -3});
  const auto image = bona_complement(pi, 3);
  r.witness = {pi, image};
  r.details["pi"] = format_window(pi);
  r.details["c3_pi"] = format_window(image);
  r.details["inv_B_pi"] = std::to_string(inv_b(pi));
  r.details["inv_B_c3_pi"] = std::to_string(inv_b(image));
  if (image != expected) {
    fail(r, "c_3 image is " + format_window(image) + ", expected " + format_window(expected), {pi, image});
  }
  if (parity(inv_b(pi)) == parity(inv_b(image))) {
    fail(r, "c_3 preserves the inv_B parity of the witness", {pi, image});
  }

  // Contrast: the sign-flip generators of B_4 keep inv_B parity everywhere.
  const GeneratorSet generators = generator_set(4);
  const auto flipped = sgn_flip(pi, 3);
  r.details["sgn_flip3_pi"] = format_window(flipped);
  if (parity(inv_b(flipped)) != parity(inv_b(pi))) {
    fail(r, "sgn_flip at 3 changes the inv_B parity of the witness", {pi, flipped});
  }
  std::vector<int> a(4);
  std::uint64_t checked = 0;
  for_each_signed(4, [&](Window w) {
    for (int p : generators.positions) {
      std::copy(w.begin(), w.end(), a.begin());
      sgn_flip_in_place(a, p);
      ++checked;
      if (parity(inv_b(a)) != parity(inv_b(w))) {
        fail(r, "sgn_flip at " + std::to_string(p) + " changes inv_B parity", {to_perm(w), to_perm(a)});
      }
    }
  });
  r.details["contrast_checks"] = std::to_string(checked);
  return r;
}

std::vector<VerificationReport> Verifier::run_all(int n_max) {
  std::vector<VerificationReport> out;
  if (n_max < 1) return out;
  const auto selectors = standard_selectors();
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(check_lemmas_action(n));
    out.push_back(check_orbit_gf(n));
    out.push_back(check_inv_relation(n));
    out.push_back(check_parity_preservation(n));
    out.push_back(check_divisibility(n, TypeA{}));
    for (auto s : selectors) out.push_back(check_divisibility(n, s));
    for (unsigned k = 1; 2 * static_cast<int>(k) + 3 <= n; ++k)
      for (auto s : selectors) out.push_back(check_moments(n, k, s));
    out.push_back(check_symmetries(n));
  }
  out.push_back(check_bona_remark());
  return out;
}

bool all_passed(std::span<const VerificationReport> reports) noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

std::string render_table(std::span<const VerificationReport> reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : " ") + k + "=" + v;
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.check_name;
    for (std::size_t pad = r.check_name.size(); pad < 13; ++pad) out << ' ';
    out << params;
    if (!r.passed) {
      if (auto it = r.details.find("discrepancy"); it != r.details.end()) out << "  " << it->second;
    } else if (auto it = r.details.find("order"); it != r.details.end()) {
      out << "  order=" << it->second << " expected>=" << r.details.at("expected_order");
    }
    if (!r.witness.empty()) {
      out << "  witness:";
      for (const auto& w : r.witness) out << ' ' << format_window(w);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace altruns
