#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = oddmult::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::set<std::string> numbers_in_text(const std::string& text) {
  static const std::regex number(R"(-?\d+(?:\.\d+)?)");
  std::set<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) {
    out.insert(it->str());
  }
  return out;
}

void collect(const nlohmann::json& j, std::set<std::string>& out) {
  if (j.is_object() || j.is_array()) {
    for (const auto& [key, value] : j.items()) {
      if (j.is_object() && std::regex_match(key, std::regex(R"(\d+)"))) out.insert(key);
      collect(value, out);
    }
  } else if (j.is_number_integer() || j.is_number_unsigned()) {
    out.insert(std::to_string(j.get<long long>()));
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (std::regex_match(s, std::regex(R"(-?\d+(?:\.\d+)?)"))) out.insert(s);
  } else if (j.is_boolean()) {
    out.insert(j.get<bool>() ? "1" : "0");
  }
}

}  // namespace

TEST_CASE("f and c1") {
  CHECK(run({"f", "81", "3"}).out == "f(81, 3) = 87\n");
  CHECK(run({"f", "1", "3", "--format", "csv"}).out == "n,x,f\n1,3,3\n");
  CHECK(run({"--format", "json", "f", "111", "11"}).out == "{\"n\":111,\"x\":11,\"f\":121}\n");
  const Outcome c1 = run({"c1", "111"});
  CHECK(c1.code == 0);
  CHECK(c1.out == "c1(111) = 115 (gap 4, window {3, 5, 7, 11})\n");
}

TEST_CASE("classify shifts to n = m - 2") {
  CHECK(contains(run({"classify", "113"}).out, "prime (gap 4, c1=115 over n=111)"));
  CHECK(contains(run({"classify", "191"}).out, "prime, twin lower (gap 6"));
  CHECK(contains(run({"classify", "299"}).out, "composite (gap 2"));
  CHECK(run({"classify", "5"}).code == oddmult::cli::kUsageOrDomain);
}

TEST_CASE("divisors and isprime") {
  CHECK(run({"divisors", "7663"}).out == "1, 79, 97, 7663\n");
  CHECK(run({"divisors", "15015", "--primes-only"}).out == "3, 5, 7, 11, 13\n");
  CHECK(run({"divisors", "3913", "--bounded"}).out == "1, 7, 13, 43, 91, 301, 559, 3913\n");
  CHECK(contains(run({"isprime", "139"}).out, "139: prime"));
  CHECK(contains(run({"isprime", "3913"}).out, "3913: composite"));
}

TEST_CASE("divisor table has one row per scanned x") {
  const Outcome t = run({"divisors", "15015", "--table"});
  REQUIRE(t.code == 0);
  std::istringstream lines(t.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 1 + 15015 / 2 + 1);
  CHECK(rows[0] == "n,x_i,residual");
  CHECK(rows[1] == "15015,1,0");
  CHECK(rows[5] == "15015,9,6");
  CHECK(rows[9] == "15015,17,30");
  CHECK(rows[10] == "15015,19,14");
  CHECK(rows[12] == "15015,23,4");
  CHECK(rows.back() == "15015,15015,0");

  const Outcome primes = run({"divisors", "7663", "--table", "--primes-only"});
  CHECK(primes.out == "n,x_i,residual\n7663,79,0\n7663,97,0\n");
}

TEST_CASE("sumrecip reproduces the worked censuses") {
  const Outcome s11 = run({"sumrecip", "11", "--interval", "full"});
  REQUIRE(s11.code == 0);
  CHECK(contains(s11.out, "886/1155 (0.76710)"));
  CHECK(contains(s11.out, "dup      = 4\n"));
  CHECK(contains(s11.out, "pi(L)    = 9\n"));
  CHECK(contains(s11.out, "epsilon  = 1\n"));

  const Outcome s37 = run({"sumrecip", "37"});
  CHECK(contains(s37.out, "(1.09272)"));
  CHECK(contains(s37.out, "dup      = 29\n"));
  CHECK(contains(s37.out, "pi(L)    = 21\n"));
  CHECK(contains(s37.out, "epsilon  = 0\n"));
  CHECK(contains(s37.out, "b - a    = 152\n"));

  CHECK(contains(run({"sumrecip", "3", "--interval", "direct"}).out, "1/3 (0.33333)"));
  CHECK(contains(run({"sumrecip", "11", "--interval", "lower"}).out, "886/1155"));
  CHECK(contains(run({"sumrecip", "11", "--interval", "upper"}).out, "886/1155"));
  CHECK(run({"sumrecip", "3"}).code == oddmult::cli::kUsageOrDomain);
}

TEST_CASE("census json schema") {
  const Outcome c = run({"census", "11", "--format", "json"});
  REQUIRE(c.code == 0);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["a"] == 121);
  CHECK(j["b"] == 169);
  CHECK(j["n"] == 11);
  CHECK(j["counts"]["3"] == 8);
  CHECK(j["counts"]["11"] == 2);
  CHECK(j["dup"] == 4);
  CHECK(j["counted"] == 18);
  CHECK(j["c_sum"]["num"] == "158");
  CHECK(j["c_sum"]["den"] == "385");
  CHECK(j["pi_diff"] == 9);
  CHECK(j["epsilon"] == 1);
}

TEST_CASE("pisquare") {
  const Outcome p7 = run({"pisquare", "7"});
  CHECK(contains(p7.out, "odd-only  = 14\n"));
  CHECK(contains(p7.out, "standard  = 15\n"));
  CHECK(contains(run({"pisquare", "3"}).out, "odd-only  = 3\n"));
}

TEST_CASE("json and text carry the same numbers") {
  const std::vector<std::vector<std::string>> commands = {
      {"sumrecip", "37"}, {"sumrecip", "11", "--interval", "upper"}, {"census", "11"},
      {"pisquare", "7"},  {"classify", "191"}, {"c1", "297"}, {"f", "81", "7"}};
  for (const auto& cmd : commands) {
    auto text_args = cmd;
    auto json_args = cmd;
    json_args.insert(json_args.end(), {"--format", "json"});
    const Outcome text = run(text_args);
    const Outcome js = run(json_args);
    REQUIRE(text.code == 0);
    REQUIRE(js.code == 0);
    std::set<std::string> from_json;
    collect(nlohmann::json::parse(js.out), from_json);
    const std::set<std::string> from_text = numbers_in_text(text.out);
    for (const auto& v : from_json) {
      // booleans show up as words in text
      if (v == "0" || v == "1") continue;
      CHECK_MESSAGE(from_text.count(v) == 1, cmd[0] << ": " << v << " missing from text");
    }
    for (const auto& v : from_text) {
      if (v == "1" || v == "2") continue;  // "1/p", "f(n, x)" style labels
      CHECK_MESSAGE(from_json.count(v) == 1, cmd[0] << ": " << v << " missing from json");
    }
  }
}

TEST_CASE("verify sweeps and exit codes") {
  const Outcome ok = run({"verify", "--max", "999", "--suite", "census"});
  CHECK(ok.code == oddmult::cli::kOk);
  CHECK(contains(ok.out, "census: 498 checked, 0 failed  PASS"));

  const Outcome one = run({"verify", "--max", "301", "--suite", "all", "--threads", "1"});
  const Outcome four = run({"verify", "--max", "301", "--suite", "all", "--threads", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);

  CHECK(run({"verify", "--max", "3"}).code == oddmult::cli::kUsageOrDomain);
  CHECK(run({"verify", "--max", "999", "--oracle-limit", "5000"}).code == oddmult::cli::kCapacity);
}

TEST_CASE("usage, domain and capacity errors") {
  CHECK(run({}).code == oddmult::cli::kUsageOrDomain);
  CHECK(run({"frobnicate"}).code == oddmult::cli::kUsageOrDomain);
  const Outcome even = run({"f", "4", "3"});
  CHECK(even.code == oddmult::cli::kUsageOrDomain);
  CHECK(contains(even.err, "odd"));
  CHECK(run({"divisors", "1"}).code == oddmult::cli::kUsageOrDomain);
  CHECK(run({"f", "-3", "3"}).code == oddmult::cli::kUsageOrDomain);
  CHECK(run({"sumrecip", "101", "--oracle-limit", "50"}).code == oddmult::cli::kCapacity);
  CHECK(run({"--help"}).code == oddmult::cli::kOk);
}

TEST_CASE("oracle cap from the environment") {
  ::setenv(oddmult::cli::kOracleLimitEnv, "50", 1);
  const Outcome capped = run({"sumrecip", "101"});
  ::setenv(oddmult::cli::kOracleLimitEnv, "junk", 1);
  const Outcome junk = run({"sumrecip", "11"});
  ::unsetenv(oddmult::cli::kOracleLimitEnv);
  CHECK(capped.code == oddmult::cli::kCapacity);
  CHECK(junk.code == oddmult::cli::kUsageOrDomain);
  CHECK(run({"sumrecip", "101"}).code == oddmult::cli::kOk);
}
