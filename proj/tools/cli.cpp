#include "cli.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "altruns/enumerate.hpp"
#include "altruns/error.hpp"
#include "altruns/group_action.hpp"
#include "altruns/json_io.hpp"
#include "altruns/statistics.hpp"
#include "altruns/verify.hpp"

namespace altruns::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct CommonFlags {
  std::string format = "plain";
  unsigned jobs = 1;
  std::optional<int> cap_override;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_csv) {
  std::vector<std::string> formats{"plain", "json"};
  if (with_csv) formats.push_back("csv");
  cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--jobs", flags.jobs, "Worker threads (one shard per job)")->check(CLI::PositiveNumber);
  cmd->add_option("--cap-override", flags.cap_override, "Raise or lower the enumeration cap on n")
      ->check(CLI::PositiveNumber);
}

RunOptions run_options(const CommonFlags& flags) {
  RunOptions options;
  options.jobs = flags.jobs;
  if (flags.cap_override) {
    options.limits.brute_max_n = *flags.cap_override;
    options.limits.orbit_max_n = *flags.cap_override;
  }
  return options;
}

std::string coeff_list(const IntPolynomial& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) s += (i ? "," : "") + f.coeffs()[i].get_str();
  return s + "]";
}

int expected_order(int n, const Family& family) {
  return std::holds_alternative<TypeA>(family) ? std::max(0, (n - 2) / 2) : (n - 1) / 2;
}

// ---------------------------------------------------------------- poly

struct PolyArgs {
  int n = 1;
  std::string class_token = "B:any:any";
  std::string backend = "brute";
  CommonFlags common;
};

int cmd_poly(const PolyArgs& args, std::ostream& out) {
  const Family family = parse_family(args.class_token);
  const Backend backend = parse_backend(args.backend);
  const auto start = Clock::now();
  const RunResult result = run_polynomial(args.n, family, backend, run_options(args.common));
  const double ms = elapsed_ms(start);
  const IntPolynomial& f = result.polynomial;
  const std::optional<unsigned> order =
      f.is_zero() ? std::nullopt : std::optional<unsigned>(one_plus_t_order(f));

  if (args.common.format == "csv") {
    out << "exponent,coefficient\n";
    for (std::size_t e = 0; e < f.coeffs().size(); ++e) out << e << ',' << f.coeffs()[e].get_str() << '\n';
  } else if (args.common.format == "json") {
    nlohmann::json j{{"n", args.n},
                     {"class", to_token(family)},
                     {"backend", std::string(to_string(backend))},
                     {"polynomial", polynomial_to_json(f)},
                     {"cardinality", f.evaluate(1).get_str()},
                     {"one_plus_t_order", order ? nlohmann::json(*order) : nlohmann::json(nullptr)},
                     {"expected_order", expected_order(args.n, family)},
                     {"visited", result.visited},
                     {"elapsed_ms", ms}};
    out << j.dump(2) << '\n';
  } else {
    out << "class        " << to_token(family) << '\n'
        << "n            " << args.n << '\n'
        << "backend      " << to_string(backend) << '\n'
        << "polynomial   " << to_string(f) << '\n'
        << "coeffs       " << coeff_list(f) << '\n'
        << "cardinality  " << f.evaluate(1).get_str() << '\n'
        << "(1+t)-order  " << (order ? std::to_string(*order) : "infinite") << " (guaranteed >= "
        << expected_order(args.n, family) << ")\n"
        << "visited      " << result.visited << '\n'
        << "elapsed_ms   " << std::fixed << std::setprecision(3) << ms << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- stat

int cmd_stat(const std::string& text, const std::string& format, std::ostream& out) {
  const SignedPermutation pi = parse_window(text);
  const bool ordinary = negs_count(pi) == 0;
  std::vector<std::string> classes;
  for (auto s : standard_selectors())
    if (in_class(pi, s)) classes.push_back(to_token(s));

  if (format == "json") {
    nlohmann::json j{{"window", format_window(pi)},
                     {"n", pi.size()},
                     {"altruns_B", altruns_b(pi)},
                     {"altruns_A", ordinary ? nlohmann::json(altruns_a(pi)) : nlohmann::json(nullptr)},
                     {"inv_A", inv_a(pi)},
                     {"inv_B", inv_b(pi)},
                     {"inv_D", inv_d(pi)},
                     {"negs_count", negs_count(pi)},
                     {"classes", classes}};
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  out << "window      " << format_window(pi) << '\n'
      << "altruns_B   " << altruns_b(pi) << '\n'
      << "altruns_A   " << (ordinary ? std::to_string(altruns_a(pi)) : "n/a (signed)") << '\n'
      << "inv_A       " << inv_a(pi) << '\n'
      << "inv_B       " << inv_b(pi) << '\n'
      << "inv_D       " << inv_d(pi) << '\n'
      << "negs_count  " << negs_count(pi) << '\n'
      << "classes    ";
  for (const auto& c : classes) out << ' ' << c;
  out << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------- orbits

struct OrbitArgs {
  int n = 1;
  std::string class_token = "B:pos:any";
  CommonFlags common;
};

int cmd_orbits(const OrbitArgs& args, std::ostream& out) {
  const ClassSelector selector = parse_selector(args.class_token);
  const RunOptions options = run_options(args.common);
  if (args.n > options.limits.orbit_max_n || args.n > kHardMaxN) {
    throw Error(Errc::resource_cap, "n = " + std::to_string(args.n) + " exceeds the orbit cap");
  }
  if (args.n < 1) throw Error(Errc::precondition_violated, "n must be positive");
  const GeneratorSet generators = generator_set(args.n);
  if (!is_orbit_closed(selector, generators)) throw Error(Errc::selector_not_orbit_closed, args.class_token);

  std::vector<OrbitSummary> summaries;
  IntPolynomial total;
  for_each_transversal(args.n, selector, generators, ShardSpec{}, [&](Window w) {
    summaries.push_back(orbit_min_runs(SignedPermutation::make_checked({w.begin(), w.end()}), generators));
    total += summaries.back().polynomial();
  });

  std::string positions;
  for (int p : generators.positions) positions += (positions.empty() ? "" : ",") + std::to_string(p);

  if (args.common.format == "csv") {
    out << "representative,min_runs,m\n";
    for (const auto& s : summaries) out << '"' << format_window(s.representative) << "\"," << s.min_runs << ',' << s.m << '\n';
  } else if (args.common.format == "json") {
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& s : summaries)
      orbits.push_back({{"representative", format_window(s.representative)}, {"min_runs", s.min_runs}});
    nlohmann::json j{{"n", args.n},
                     {"class", to_token(selector)},
                     {"generator_positions", generators.positions},
                     {"m", generators.m()},
                     {"orbits", std::move(orbits)},
                     {"polynomial", polynomial_to_json(total)}};
    out << j.dump(2) << '\n';
  } else {
    out << "# n=" << args.n << " class=" << to_token(selector) << " T_n={" << positions
        << "} m=" << generators.m() << '\n';
    for (const auto& s : summaries) {
      out << format_window(s.representative) << "  a=" << s.min_runs << "  " << to_string(s.polynomial())
          << '\n';
    }
    out << "# orbits=" << summaries.size() << " total=" << to_string(total) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  bool all = false;
  std::string check;
  std::optional<int> n;
  int n_max = 6;
  std::optional<unsigned> k;
  std::string class_token;
  CommonFlags common;
};

std::vector<VerificationReport> run_named_check(Verifier& verifier, const VerifyArgs& args) {
  std::vector<VerificationReport> reports;
  const int lo = args.n ? *args.n : 1;
  const int hi = args.n ? *args.n : args.n_max;
  const std::string& c = args.check;

  if (c == "bona") {
    reports.push_back(verifier.check_bona_remark());
    return reports;
  }
  if (c == "moments" && args.k && args.n) {
    // Explicit (n, k) goes straight through so the n >= 2k+3 gate is reported.
    const auto selectors = args.class_token.empty() ? standard_selectors()
                                                    : std::vector{parse_selector(args.class_token)};
    for (auto s : selectors) reports.push_back(verifier.check_moments(*args.n, *args.k, s));
    return reports;
  }
  for (int n = lo; n <= hi; ++n) {
    if (c == "lemmas") {
      reports.push_back(verifier.check_lemmas_action(n));
    } else if (c == "orbit-gf") {
      reports.push_back(verifier.check_orbit_gf(n));
    } else if (c == "inv-relation") {
      reports.push_back(verifier.check_inv_relation(n));
    } else if (c == "parity") {
      reports.push_back(verifier.check_parity_preservation(n));
    } else if (c == "symmetries") {
      reports.push_back(verifier.check_symmetries(n));
    } else if (c == "divisibility") {
      std::vector<Family> families;
      if (!args.class_token.empty()) {
        families.push_back(parse_family(args.class_token));
      } else {
        families.push_back(TypeA{});
        for (auto s : standard_selectors()) families.push_back(s);
      }
      for (const auto& f : families) reports.push_back(verifier.check_divisibility(n, f));
    } else if (c == "moments") {
      const auto selectors = args.class_token.empty() ? standard_selectors()
                                                      : std::vector{parse_selector(args.class_token)};
      for (unsigned k = 1; 2 * static_cast<int>(k) + 3 <= n; ++k) {
        if (args.k && k != *args.k) continue;
        for (auto s : selectors) reports.push_back(verifier.check_moments(n, k, s));
      }
    }
  }
  return reports;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  VerifyOptions options;
  options.run = run_options(args.common);
  options.seed = args.common.seed;
  Verifier verifier(options);

  std::vector<VerificationReport> reports;
  if (args.all || args.check.empty()) {
    reports = verifier.run_all(args.n ? *args.n : args.n_max);
  } else {
    reports = run_named_check(verifier, args);
  }

  if (args.common.format == "json") {
    out << reports_to_json(reports).dump(2) << '\n';
  } else {
    out << render_table(reports);
    const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed; });
    out << "# " << reports.size() << " checks, " << failed << " failed\n";
  }
  return all_passed(reports) ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  int n = 6;
  std::string class_token = "B:pos:any";
  CommonFlags common;
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  const ClassSelector selector = parse_selector(args.class_token);
  const RunOptions options = run_options(args.common);

  struct Row {
    std::string backend;
    std::uint64_t shards;
    double ms;
    RunResult result;
  };
  std::vector<Row> rows;
  const auto timed = [&](Backend backend, std::uint64_t shards) {
    RunOptions o = options;
    o.shards = shards;
    const auto start = Clock::now();
    RunResult r = run_polynomial(args.n, selector, backend, o);
    rows.push_back({std::string(to_string(backend)), shards, elapsed_ms(start), std::move(r)});
  };
  const std::uint64_t shards = std::max(1u, args.common.jobs);
  timed(Backend::brute, shards);
  timed(Backend::orbit, shards);
  if (shards != 1) {
    timed(Backend::brute, 1);
    timed(Backend::orbit, 1);
  }

  bool equal = true;
  for (const auto& row : rows) equal = equal && row.result.polynomial == rows.front().result.polynomial;
  const int m = generator_set(args.n).m();
  const std::uint64_t brute_visits = rows[0].result.visited;
  const std::uint64_t orbit_visits = rows[1].result.visited;
  const std::string ratio =
      orbit_visits ? std::to_string(static_cast<double>(brute_visits) / static_cast<double>(orbit_visits))
                   : "n/a";

  if (args.common.format == "json") {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& row : rows)
      runs.push_back({{"backend", row.backend}, {"shards", row.shards}, {"wall_ms", row.ms},
                      {"visited", row.result.visited}});
    nlohmann::json j{{"n", args.n},
                     {"class", to_token(selector)},
                     {"m", m},
                     {"runs", std::move(runs)},
                     {"visit_ratio", ratio},
                     {"expected_ratio", std::uint64_t{1} << m},
                     {"verified_equal", equal},
                     {"polynomial", polynomial_to_json(rows.front().result.polynomial)}};
    out << j.dump(2) << '\n';
  } else {
    out << "# n=" << args.n << " class=" << to_token(selector) << " m=" << m << '\n';
    out << std::left << std::setw(8) << "backend" << std::setw(8) << "shards" << std::setw(14) << "wall_ms"
        << "visited\n";
    for (const auto& row : rows) {
      out << std::setw(8) << row.backend << std::setw(8) << row.shards << std::setw(14) << std::fixed
          << std::setprecision(3) << row.ms << row.result.visited << '\n';
    }
    out << "visit_ratio    " << ratio << " (2^m = " << (std::uint64_t{1} << m) << ")\n"
        << "verified_equal " << (equal ? "true" : "false") << '\n';
  }
  return equal ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating-run polynomials over classes of signed permutations", "altruns"};
  app.require_subcommand(1);

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "Run polynomial of a class");
  poly_cmd->add_option("--n", poly.n, "Window length")->required()->check(CLI::PositiveNumber);
  poly_cmd->add_option("--class", poly.class_token, "A, or group:sign:parity such as D:pos:even");
  poly_cmd->add_option("--backend", poly.backend)->check(CLI::IsMember({"brute", "orbit"}));
  add_common(poly_cmd, poly.common, true);

  std::string stat_window;
  std::string stat_format = "plain";
  auto* stat_cmd = app.add_subcommand("stat", "Statistics of one signed permutation");
  stat_cmd->add_option("window", stat_window, "Comma-separated window, e.g. 5,1,4,-3,-6,2")->required();
  stat_cmd->add_option("--format", stat_format)->check(CLI::IsMember({"plain", "json"}));

  OrbitArgs orbits;
  auto* orbit_cmd = app.add_subcommand("orbits", "Orbit representatives of a class under the sign-flip action");
  orbit_cmd->add_option("--n", orbits.n)->required()->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--class", orbits.class_token);
  add_common(orbit_cmd, orbits.common, true);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification checks");
  verify_cmd->add_flag("--all", verify.all, "Run every check for n <= n-max");
  std::vector<std::string> names(std::begin(kCheckNames), std::end(kCheckNames));
  verify_cmd->add_option("--check", verify.check)->check(CLI::IsMember(names));
  verify_cmd->add_option("--n", verify.n)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n-max", verify.n_max)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--k", verify.k)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--class", verify.class_token);
  verify_cmd->add_option("--seed", verify.common.seed, "Seed for sampled lemma checks");
  add_common(verify_cmd, verify.common, false);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare brute-force and orbit backends");
  bench_cmd->add_option("--n", bench.n)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--class", bench.class_token);
  add_common(bench_cmd, bench.common, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*poly_cmd) return cmd_poly(poly, out);
    if (*stat_cmd) return cmd_stat(stat_window, stat_format, out);
    if (*orbit_cmd) return cmd_orbits(orbits, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::resource_cap ? kResourceCap : kUsageError;
  }
  return kUsageError;
}

}  // namespace altruns::cli
