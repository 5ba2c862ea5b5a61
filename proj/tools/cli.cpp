#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "oddmult/census.hpp"
#include "oddmult/classify.hpp"
#include "oddmult/errors.hpp"
#include "oddmult/factorize.hpp"
#include "oddmult/int_math.hpp"
#include "oddmult/kernel.hpp"
#include "oddmult/oracle.hpp"
#include "oddmult/pi_refine.hpp"
#include "oddmult/verify.hpp"

namespace oddmult::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Mode { Text, Json, Csv };

struct OutputFormat {
  Mode mode = Mode::Text;
  unsigned decimal_digits = 5;
};

struct Settings {
  OutputFormat format;
  std::uint64_t oracle_cap = kDefaultOracleLimit;
  unsigned threads = 1;
};

std::uint64_t oracle_cap_from_env() {
  const char* raw = std::getenv(kOracleLimitEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultOracleLimit;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used == std::string(raw).size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError(std::string(kOracleLimitEnv) + " is not a number: '" + raw + "'");
}

/// Builds the smallest oracle covering `need`, refusing to go past the cap.
PrimeOracle oracle_for(std::uint64_t need, const Settings& s) {
  if (need > s.oracle_cap) {
    throw CapacityError("this command needs an oracle up to " + std::to_string(need) +
                        " but the cap is " + std::to_string(s.oracle_cap) +
                        " (raise --oracle-limit or " + kOracleLimitEnv + ")");
  }
  return PrimeOracle::build(std::max<std::uint64_t>(need, std::min<std::uint64_t>(100, s.oracle_cap)),
                            std::max(s.oracle_cap, PrimeOracle::kDefaultMaxLimit));
}

/// Census oracle: the sieve table up to (n+2)^2 when the cap allows, otherwise
/// just enough base primes for segmented counting.
PrimeOracle census_oracle(std::uint64_t n, const Settings& s) {
  const std::uint64_t top = (n + 2) * (n + 2);
  const std::uint64_t floor_need = std::max(n + 2, isqrt(top));
  return oracle_for(std::max(floor_need, std::min(top, s.oracle_cap)), s);
}

json rational_json(const ExactRational& r, unsigned digits) {
  return json{{"num", r.numerator()}, {"den", r.denominator()}, {"decimal", r.to_decimal(digits)}};
}

std::string rational_text(const ExactRational& r, unsigned digits) {
  return r.to_string() + " (" + r.to_decimal(digits) + ")";
}

template <typename Range>
std::string join(const Range& values, const char* sep = ", ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

// -- commands ---------------------------------------------------------------

void cmd_f(std::uint64_t n_raw, std::uint64_t x_raw, const Settings& s, std::ostream& out) {
  const OddInt n(n_raw);
  const OddInt x(x_raw);
  const std::uint64_t v = f(n, x).value();
  switch (s.format.mode) {
    case Mode::Text:
      out << "f(" << n << ", " << x << ") = " << v << '\n';
      break;
    case Mode::Json:
      out << json{{"n", n.value()}, {"x", x.value()}, {"f", v}}.dump() << '\n';
      break;
    case Mode::Csv:
      out << "n,x,f\n" << n << ',' << x << ',' << v << '\n';
      break;
  }
}

void cmd_c1(std::uint64_t n_raw, const Settings& s, std::ostream& out) {
  const OddInt n(n_raw);
  const PrimeOracle oracle = oracle_for(ceil_sqrt(n.value()), s);
  const PrimeWindow window = prime_window(n, oracle);
  const std::uint64_t c1 = smallest_odd_composite_above(n, oracle).value();
  const std::uint64_t gap = c1 - n.value();
  switch (s.format.mode) {
    case Mode::Text:
      out << "c1(" << n << ") = " << c1 << " (gap " << gap << ", window {" << join(window.primes)
          << "})\n";
      break;
    case Mode::Json:
      out << json{{"n", n.value()}, {"window", window.primes}, {"c1", c1}, {"gap", gap}}.dump()
          << '\n';
      break;
    case Mode::Csv:
      out << "n,c1,gap\n" << n << ',' << c1 << ',' << gap << '\n';
      break;
  }
}

void cmd_classify(std::uint64_t m_raw, const Settings& s, std::ostream& out) {
  const OddInt m(m_raw);
  if (m.value() < 7) {
    throw DomainError("classify needs an odd m >= 7 (the test runs on n = m - 2 >= 5)");
  }
  const OddInt n(m.value() - 2);
  const PrimeOracle oracle = oracle_for(ceil_sqrt(n.value()), s);
  const GapClass g = classify_successor(n, oracle);
  switch (s.format.mode) {
    case Mode::Text: {
      std::string label = "composite";
      if (g.verdict == Verdict::Prime) label = "prime";
      if (g.verdict == Verdict::TwinLower) label = "prime, twin lower";
      out << m << ": " << label << " (gap " << g.gap << ", c1=" << g.c1 << " over n=" << n
          << ")\n";
      break;
    }
    case Mode::Json:
      out << json{{"m", m.value()},          {"n", n.value()},
                  {"c1", g.c1.value()},      {"gap", g.gap},
                  {"verdict", to_string(g.verdict)}, {"prime", g.subject_is_prime()}}
                 .dump()
          << '\n';
      break;
    case Mode::Csv:
      out << "m,n,c1,gap,verdict\n"
          << m << ',' << n << ',' << g.c1 << ',' << g.gap << ',' << to_string(g.verdict) << '\n';
      break;
  }
}

void cmd_divisors(std::uint64_t n_raw, bool primes_only, bool table, bool bounded,
                  const Settings& s, std::ostream& out) {
  const OddInt n(n_raw);
  if (n.value() < 3) throw DomainError("divisors needs an odd n >= 3");
  const PrimeOracle oracle = oracle_for(std::max<std::uint64_t>(isqrt(n.value()) + 1, 10), s);
  const ScanRange range = bounded ? ScanRange::UpToSqrt : ScanRange::Full;

  if (table) {
    // Same columns as the worked tables: one row per scanned x.
    const std::uint64_t top = bounded ? ceil_sqrt(n.value()) : n.value();
    out << "n,x_i,residual\n";
    for (std::uint64_t x = 1; x <= top; x += 2) {
      const std::uint64_t residual = divisor_residual(n, OddInt(x));
      if (primes_only && (residual != 0 || x == 1 || !oracle.is_prime(x))) continue;
      out << n << ',' << x << ',' << residual << '\n';
    }
    return;
  }

  const DivisorScan scan = odd_divisors(n, oracle, range);
  const auto& shown = primes_only ? scan.prime_solutions : scan.solutions;
  switch (s.format.mode) {
    case Mode::Text:
      out << join(shown) << '\n';
      break;
    case Mode::Json:
      out << json{{"n", n.value()},
                  {"solutions", scan.solutions},
                  {"prime_solutions", scan.prime_solutions},
                  {"omega", scan.omega_weak()}}
                 .dump()
          << '\n';
      break;
    case Mode::Csv:
      out << "n,x_i,prime\n";
      for (const std::uint64_t x : shown) {
        const bool prime = std::binary_search(scan.prime_solutions.begin(),
                                              scan.prime_solutions.end(), x);
        out << n << ',' << x << ',' << (prime ? 1 : 0) << '\n';
      }
      break;
  }
}

void cmd_isprime(std::uint64_t n_raw, const Settings& s, std::ostream& out) {
  const OddInt n(n_raw);
  if (n.value() < 3) throw DomainError("isprime needs an odd n >= 3");
  const PrimeOracle oracle = oracle_for(std::max<std::uint64_t>(isqrt(n.value()) + 1, 10), s);
  const bool prime = is_prime_by_solution_count(n);
  const DivisorScan scan = odd_divisors(n, oracle, ScanRange::Full);
  switch (s.format.mode) {
    case Mode::Text:
      out << n << ": " << (prime ? "prime" : "composite") << " (solutions " << join(scan.solutions)
          << ")\n";
      break;
    case Mode::Json:
      out << json{{"n", n.value()}, {"prime", prime}, {"solutions", scan.solutions}}.dump() << '\n';
      break;
    case Mode::Csv:
      out << "n,prime,solutions\n" << n << ',' << (prime ? 1 : 0) << ',' << join(scan.solutions, " ")
          << '\n';
      break;
  }
}

void cmd_sumrecip(std::uint64_t n_raw, const std::string& interval, const Settings& s,
                  std::ostream& out) {
  const OddInt n(n_raw);
  const unsigned digits = s.format.decimal_digits;

  if (interval == "direct") {
    if (n.value() < 3) throw DomainError("sumrecip needs an odd n >= 3");
    const PrimeOracle oracle = oracle_for(n.value(), s);
    const ExactRational value = direct_sum_recip(n, oracle);
    switch (s.format.mode) {
      case Mode::Text:
        out << "sum of 1/p over odd primes p <= " << n << " (direct)\n"
            << "  result   = " << rational_text(value, digits) << '\n';
        break;
      case Mode::Json:
        out << json{{"n", n.value()}, {"interval", "direct"}, {"value", rational_json(value, digits)}}
                   .dump()
            << '\n';
        break;
      case Mode::Csv:
        out << "n,interval,value_num,value_den,value_decimal\n"
            << n << ",direct," << value.numerator() << ',' << value.denominator() << ','
            << value.to_decimal(digits) << '\n';
        break;
    }
    return;
  }

  const Interval which = interval == "full" ? Interval::Full
                         : interval == "lower" ? Interval::Lower
                                               : Interval::Upper;
  if (n.value() < 5) throw DomainError("interval censuses need an odd n >= 5");
  if (n.value() > kMaxCensusN) throw DomainError("n exceeds " + std::to_string(kMaxCensusN));
  const PrimeOracle oracle = census_oracle(n.value(), s);
  const IntervalCensus c = census(n, which, oracle);
  const ExactRational value = c.sum_recip();
  const std::uint64_t width = c.b.value() - c.a.value();
  switch (s.format.mode) {
    case Mode::Text:
      out << "sum of 1/p over odd primes p <= " << n << " (" << to_string(which) << " interval ("
          << c.a << ", " << c.b << "])\n"
          << "  dup      = " << c.dup << '\n'
          << "  sum C    = " << rational_text(c.c_sum, digits) << '\n'
          << "  pi(L)    = " << c.pi_diff << '\n'
          << "  epsilon  = " << c.epsilon << '\n'
          << "  b - a    = " << width << '\n'
          << "  result   = " << rational_text(value, digits) << '\n';
      break;
    case Mode::Json:
      out << json{{"n", n.value()},
                  {"interval", to_string(which)},
                  {"a", c.a.value()},
                  {"b", c.b.value()},
                  {"dup", c.dup},
                  {"c_sum", rational_json(c.c_sum, digits)},
                  {"pi_diff", c.pi_diff},
                  {"epsilon", c.epsilon},
                  {"width", width},
                  {"value", rational_json(value, digits)}}
                 .dump()
          << '\n';
      break;
    case Mode::Csv:
      out << "n,interval,a,b,dup,c_sum_num,c_sum_den,pi_diff,epsilon,width,value_num,value_den,"
             "value_decimal\n"
          << n << ',' << to_string(which) << ',' << c.a << ',' << c.b << ',' << c.dup << ','
          << c.c_sum.numerator() << ',' << c.c_sum.denominator() << ',' << c.pi_diff << ','
          << c.epsilon << ',' << width << ',' << value.numerator() << ',' << value.denominator()
          << ',' << value.to_decimal(digits) << '\n';
      break;
  }
}

void cmd_census(std::uint64_t n_raw, const std::string& interval, const Settings& s,
                std::ostream& out) {
  const OddInt n(n_raw);
  if (n.value() < 5) throw DomainError("interval censuses need an odd n >= 5");
  if (n.value() > kMaxCensusN) throw DomainError("n exceeds " + std::to_string(kMaxCensusN));
  const Interval which = interval == "full" ? Interval::Full
                         : interval == "lower" ? Interval::Lower
                                               : Interval::Upper;
  const unsigned digits = s.format.decimal_digits;
  const PrimeOracle oracle = census_oracle(n.value(), s);
  const IntervalCensus c = census(n, which, oracle);
  const ExactRational value = c.sum_recip();

  switch (s.format.mode) {
    case Mode::Text: {
      out << "census of odd integers in (" << c.a << ", " << c.b << "], n = " << n << ", "
          << to_string(which) << " interval\n";
      out << std::setw(10) << "p" << std::setw(12) << "multiples" << '\n';
      for (const auto& [p, count] : c.per_prime_counts) {
        out << std::setw(10) << p << std::setw(12) << count << '\n';
      }
      out << "  counted multiples = " << c.counted_multiples() << '\n'
          << "  dup               = " << c.dup << '\n'
          << "  pi_diff           = " << c.pi_diff << '\n'
          << "  epsilon           = " << c.epsilon << '\n'
          << "  expected odd      = " << c.expected_odd << '\n'
          << "  sum C             = " << rational_text(c.c_sum, digits) << '\n'
          << "  sum 1/p           = " << rational_text(value, digits) << '\n';
      break;
    }
    case Mode::Json: {
      json counts = json::object();
      for (const auto& [p, count] : c.per_prime_counts) counts[std::to_string(p)] = count;
      out << json{{"a", c.a.value()},
                  {"b", c.b.value()},
                  {"n", n.value()},
                  {"interval", to_string(which)},
                  {"counts", counts},
                  {"counted", c.counted_multiples()},
                  {"dup", c.dup},
                  {"c_sum", rational_json(c.c_sum, digits)},
                  {"pi_diff", c.pi_diff},
                  {"epsilon", c.epsilon},
                  {"expected_odd", c.expected_odd},
                  {"sum_recip", rational_json(value, digits)}}
                 .dump()
          << '\n';
      break;
    }
    case Mode::Csv:
      out << "n,interval,a,b,p,multiples\n";
      for (const auto& [p, count] : c.per_prime_counts) {
        out << n << ',' << to_string(which) << ',' << c.a << ',' << c.b << ',' << p << ','
            << count << '\n';
      }
      break;
  }
}

void cmd_pisquare(std::uint64_t n_raw, const Settings& s, std::ostream& out) {
  const OddInt n(n_raw);
  if (n.value() < 3) throw DomainError("pisquare needs an odd n >= 3");
  if (n.value() > kMaxCensusN) throw DomainError("n exceeds " + std::to_string(kMaxCensusN));
  const unsigned digits = s.format.decimal_digits;
  const PrimeOracle oracle = oracle_for(n.value(), s);
  const PiSquareReport r = odd_prime_count_square(n, oracle);
  const std::uint64_t square = n.value() * n.value();
  switch (s.format.mode) {
    case Mode::Text:
      out << "pi(" << square << ") from the odd integers in (1, " << square << "], n = " << n
          << '\n'
          << "  dup       = " << r.dup << '\n'
          << "  sum B     = " << rational_text(r.b_sum, digits) << '\n'
          << "  sum 1/p   = " << rational_text(r.sum_recip, digits) << '\n'
          << "  odd-only  = " << r.odd_prime_count << '\n'
          << "  standard  = " << r.standard_count() << '\n';
      break;
    case Mode::Json:
      out << json{{"n", n.value()},
                  {"square", square},
                  {"dup", r.dup},
                  {"b_sum", rational_json(r.b_sum, digits)},
                  {"sum_recip", rational_json(r.sum_recip, digits)},
                  {"odd_prime_count", r.odd_prime_count},
                  {"standard_count", r.standard_count()}}
                 .dump()
          << '\n';
      break;
    case Mode::Csv:
      out << "n,square,dup,odd_prime_count,standard_count\n"
          << n << ',' << square << ',' << r.dup << ',' << r.odd_prime_count << ','
          << r.standard_count() << '\n';
      break;
  }
}

int cmd_verify(std::uint64_t max_n, const std::string& suite_name, const Settings& s,
               std::ostream& out) {
  if (max_n < 5) throw DomainError("verify needs --max >= 5");
  std::vector<Suite> suites;
  if (suite_name == "all") {
    suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
  } else {
    suites.push_back(*parse_suite(suite_name));
  }
  std::uint64_t need = 0;
  for (const Suite suite : suites) need = std::max(need, required_oracle_limit(suite, max_n));
  const PrimeOracle oracle = oracle_for(need, s);

  bool all_passed = true;
  if (s.format.mode == Mode::Csv) out << "suite,max,checked,failed,status\n";
  for (const Suite suite : suites) {
    const SuiteResult r = run_suite(suite, max_n, oracle, s.threads);
    all_passed = all_passed && r.passed();
    const char* status = r.passed() ? "PASS" : "FAIL";
    switch (s.format.mode) {
      case Mode::Text:
        out << to_string(suite) << ": " << r.checked << " checked, " << r.failed << " failed  "
            << status << '\n';
        for (const std::string& c : r.counterexamples) out << "    " << c << '\n';
        break;
      case Mode::Json:
        out << json{{"suite", to_string(suite)},
                    {"max", max_n},
                    {"checked", r.checked},
                    {"failed", r.failed},
                    {"passed", r.passed()},
                    {"counterexamples", r.counterexamples}}
                   .dump()
            << '\n';
        break;
      case Mode::Csv:
        out << to_string(suite) << ',' << max_n << ',' << r.checked << ',' << r.failed << ','
            << status << '\n';
        break;
    }
  }
  return all_passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd-multiple kernel f(n, x): primality, factorization and prime-sum identities",
               "oddmult"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  std::string format = "text";
  std::uint64_t cap_flag = 0;
  app.add_option("--format", format, "Output mode")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--digits", settings.format.decimal_digits, "Decimal places for rationals")
      ->check(CLI::Range(0U, 100U))
      ->capture_default_str();
  app.add_option("--oracle-limit", cap_flag,
                 std::string("Largest sieve the command may build (default 10^7, or ") +
                     kOracleLimitEnv + ")");
  app.add_option("--threads", settings.threads, "Worker threads for verify sweeps")
      ->check(CLI::Range(1U, 1024U))
      ->capture_default_str();

  std::uint64_t n = 0;
  std::uint64_t x = 0;
  std::string interval = "full";
  std::string suite = "all";
  std::uint64_t max_n = 0;
  bool primes_only = false;
  bool table = false;
  bool bounded = false;

  auto* f_cmd = app.add_subcommand("f", "Smallest odd multiple of x above n");
  f_cmd->add_option("n", n, "Odd n >= 1")->required();
  f_cmd->add_option("x", x, "Odd x >= 1")->required();

  auto* c1_cmd = app.add_subcommand("c1", "Smallest odd composite above n, with its gap");
  c1_cmd->add_option("n", n, "Odd n >= 5")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Gap test for an odd m >= 7");
  classify_cmd->add_option("m", n, "Odd number to classify")->required();

  auto* divisors_cmd = app.add_subcommand("divisors", "Solutions of f(n - 2, x) = n");
  divisors_cmd->add_option("n", n, "Odd n >= 3")->required();
  divisors_cmd->add_flag("--primes-only", primes_only, "Only prime solutions");
  divisors_cmd->add_flag("--table", table, "CSV table n,x_i,residual over every scanned x");
  divisors_cmd->add_flag("--bounded", bounded, "Scan x <= ceil(sqrt n) and derive cofactors");

  auto* isprime_cmd = app.add_subcommand("isprime", "Two-solution primality test");
  isprime_cmd->add_option("n", n, "Odd n >= 3")->required();

  auto* sumrecip_cmd = app.add_subcommand("sumrecip", "Sum of 1/p over odd primes p <= n");
  sumrecip_cmd->add_option("n", n, "Odd n")->required();
  sumrecip_cmd->add_option("--interval", interval, "Which identity to evaluate")
      ->check(CLI::IsMember({"full", "lower", "upper", "direct"}))
      ->capture_default_str();

  auto* census_cmd = app.add_subcommand("census", "Full interval census record");
  census_cmd->add_option("n", n, "Odd n >= 5")->required();
  census_cmd->add_option("--interval", interval, "Interval to count")
      ->check(CLI::IsMember({"full", "lower", "upper"}))
      ->capture_default_str();

  auto* pisquare_cmd = app.add_subcommand("pisquare", "pi(n^2) from the counting identity");
  pisquare_cmd->add_option("n", n, "Odd n >= 3")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Sweep property suites against the sieve");
  verify_cmd->add_option("--max", max_n, "Largest n swept")->required();
  verify_cmd->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"kernel", "classify", "factorize", "census", "pisquare", "all"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrDomain;
  }

  try {
    settings.format.mode = format == "json" ? Mode::Json : format == "csv" ? Mode::Csv : Mode::Text;
    settings.oracle_cap = cap_flag != 0 ? cap_flag : oracle_cap_from_env();

    if (f_cmd->parsed()) {
      cmd_f(n, x, settings, out);
    } else if (c1_cmd->parsed()) {
      cmd_c1(n, settings, out);
    } else if (classify_cmd->parsed()) {
      cmd_classify(n, settings, out);
    } else if (divisors_cmd->parsed()) {
      cmd_divisors(n, primes_only, table, bounded, settings, out);
    } else if (isprime_cmd->parsed()) {
      cmd_isprime(n, settings, out);
    } else if (sumrecip_cmd->parsed()) {
      cmd_sumrecip(n, interval, settings, out);
    } else if (census_cmd->parsed()) {
      cmd_census(n, interval, settings, out);
    } else if (pisquare_cmd->parsed()) {
      cmd_pisquare(n, settings, out);
    } else if (verify_cmd->parsed()) {
      return cmd_verify(max_n, suite, settings, out);
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrDomain;
  }
  return kOk;
}

}  // namespace oddmult::cli
