#pragma once

// Orchestration of the verification checks over a list of primes, and the
// text / json / csv renderings of the result.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/eigen_sums.hpp"

namespace gl2h {

enum class Mode : std::uint8_t { Matrix, Charsum, Both };
enum class Check : std::uint8_t { Structure, DoubleCosets, Characters, Decompose, Relations, Exactness, Table2, Nonvanishing };
enum class OutputFormat : std::uint8_t { Text, Json, Csv };
enum class Status : std::uint8_t { Pass, Fail, Skipped };

/// Checks in execution order.
inline constexpr Check kAllChecks[] = {Check::Structure, Check::DoubleCosets, Check::Characters, Check::Decompose,
                                       Check::Relations, Check::Exactness,    Check::Nonvanishing, Check::Table2};

std::string_view check_name(Check c);
std::optional<Check> parse_check(std::string_view name);
std::string_view mode_name(Mode m);
std::optional<Mode> parse_mode(std::string_view name);
std::string_view format_name(OutputFormat f);
std::optional<OutputFormat> parse_format(std::string_view name);
std::string_view status_name(Status s);

inline const std::vector<std::uint32_t> kTable2Primes{3, 5, 7, 11, 13, 17, 19};

struct SuiteConfig {
  std::vector<std::uint32_t> primes = kTable2Primes;
  Mode mode = Mode::Both;
  std::vector<Check> checks{std::begin(kAllChecks), std::end(kAllChecks)};
  bool allow_large = false;
  unsigned threads = 1;
};

/// Throws Error(UnsupportedPrime / ResourceLimit / InvalidArgument) for a
/// config that cannot run: even or composite primes, an empty list, or
/// matrix mode above the enumeration limit without allow_large.
void validate(const SuiteConfig& config);

/// Sorted, de-duplicated primes and checks in execution order.
SuiteConfig normalized(SuiteConfig config);

/// Thread count from GL2H_THREADS, or 1.
unsigned threads_from_environment();

struct CheckResult {
  Check check = Check::Structure;
  Status status = Status::Skipped;
  std::string detail;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  double seconds = 0.0;
};

struct PrimeReport {
  std::uint32_t p = 0;
  std::vector<CheckResult> results;
  std::optional<Table2Row> table2;
  bool passed() const;
};

struct VerificationReport {
  Mode mode = Mode::Both;
  std::vector<PrimeReport> primes;
  bool passed() const;
};

/// Factored positive value of a reference determinant entry, as (prime, exponent) pairs.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

struct ReferenceRow {
  Factorization total, u, w, x;
  std::optional<Factorization> v;
};

/// The published determinant rows, p = 3..19.
std::optional<ReferenceRow> reference_row(std::uint32_t p);

BigInt expand(const Factorization& f);

/// "2^20 * 3^9" style rendering of |n| by trial division; "1" for 1, "0"
/// for 0. Any cofactor left after dividing out primes below `bound` is
/// printed as a plain decimal.
std::string factored(const BigInt& n, std::uint64_t bound = 1u << 16);

VerificationReport run_suite(const SuiteConfig& config);

/// Runs one check at one prime. Exposed for tests.
CheckResult run_check(std::uint32_t p, Check check, Mode mode, bool allow_large);

std::string render(const VerificationReport& report, OutputFormat format, bool include_timing = true);

}  // namespace gl2h
