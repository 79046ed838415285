#include <doctest.h>

#include <cstdlib>

#include "core/errors.hpp"
#include "core/suite.hpp"

using namespace gl2h;

TEST_CASE("names round-trip") {
  for (auto c : kAllChecks) CHECK(parse_check(check_name(c)) == c);
  for (auto m : {Mode::Matrix, Mode::Charsum, Mode::Both}) CHECK(parse_mode(mode_name(m)) == m);
  for (auto f : {OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv}) CHECK(parse_format(format_name(f)) == f);
  CHECK_FALSE(parse_check("tables").has_value());
}

TEST_CASE("validation") {
  SuiteConfig c;
  CHECK_NOTHROW(validate(c));
  c.primes = {3, 2};
  CHECK_THROWS_AS(validate(c), Error);
  c.primes = {};
  CHECK_THROWS_AS(validate(c), Error);
  c.primes = {29};
  c.mode = Mode::Matrix;
  try {
    validate(c);
    FAIL("matrix mode at 29 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResourceLimit);
  }
  c.allow_large = true;
  CHECK_NOTHROW(validate(c));
  c.primes = {67};
  CHECK_THROWS_AS(validate(c), Error);
}

TEST_CASE("normalisation sorts primes and orders checks") {
  SuiteConfig c;
  c.primes = {7, 3, 7, 5};
  c.checks = {Check::Table2, Check::Structure, Check::Table2};
  c.threads = 0;
  const auto n = normalized(c);
  CHECK(n.primes == std::vector<std::uint32_t>{3, 5, 7});
  CHECK(n.checks == std::vector<Check>{Check::Structure, Check::Table2});
  CHECK(n.threads == 1);
}

TEST_CASE("thread count from the environment") {
  setenv("GL2H_THREADS", "4", 1);
  CHECK(threads_from_environment() == 4);
  setenv("GL2H_THREADS", "zero", 1);
  CHECK(threads_from_environment() == 1);
  unsetenv("GL2H_THREADS");
  CHECK(threads_from_environment() == 1);
}

TEST_CASE("any failing check fails the report") {
  VerificationReport rep;
  rep.primes.resize(2);
  rep.primes[0].results.push_back(CheckResult{Check::Table2, Status::Pass, "", {}, 0});
  rep.primes[1].results.push_back(CheckResult{Check::Structure, Status::Skipped, "", {}, 0});
  CHECK(rep.passed());
  rep.primes[1].results.push_back(CheckResult{Check::Table2, Status::Fail, "X column: got 1, expected 2^2", {}, 0});
  CHECK_FALSE(rep.passed());
  CHECK(render(rep, OutputFormat::Csv).find("0,table2,fail,X column: got 1, expected 2^2") == std::string::npos);
  CHECK(render(rep, OutputFormat::Csv).find("table2,fail,\"X column: got 1, expected 2^2\"") != std::string::npos);
  CHECK(render(rep, OutputFormat::Text).find("overall: FAIL") != std::string::npos);
}

TEST_CASE("checks by mode") {
  CHECK(run_check(5, Check::Relations, Mode::Charsum, false).status == Status::Skipped);
  CHECK(run_check(5, Check::Relations, Mode::Matrix, false).status == Status::Pass);
  CHECK(run_check(29, Check::Structure, Mode::Both, false).status == Status::Skipped);
  const auto t = run_check(29, Check::Table2, Mode::Both, false);
  CHECK(t.status == Status::Pass);
  CHECK(t.data.contains("det_U"));
  CHECK_FALSE(t.data.contains("det_total"));
  const auto nv = run_check(31, Check::Nonvanishing, Mode::Charsum, false);
  CHECK(nv.status == Status::Pass);
}

TEST_CASE("reference rows") {
  CHECK(expand(reference_row(7)->total) == BigInt("20639121408"));
  CHECK_FALSE(reference_row(23).has_value());
  CHECK(reference_row(13)->v.has_value());
  CHECK_FALSE(reference_row(11)->v.has_value());
}
