// verify: runs the GL_2(F_p) verification checks through the C interface.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or configuration error.

#include <cstdio>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gl2hecke/gl2hecke.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

bool odd_prime_candidate(std::uint32_t n) {
  if (n < 3) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int report_error(const char* what) {
  std::fprintf(stderr, "verify: %s: %s\n", what, gl2h_last_error());
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify double coset operator identities and determinants for GL_2(F_p)."};
  app.set_version_flag("--version", "verify 1.0.0");

  std::vector<std::uint32_t> primes, prime_list;
  std::optional<std::uint32_t> max_prime;
  std::string mode = "both";
  std::vector<std::string> checks;
  std::string format = "text";
  std::string out;
  bool allow_large = false;
  bool no_timing = false;

  app.add_option("--prime", primes, "Prime to verify (repeatable)")->take_all();
  app.add_option("--primes", prime_list, "Comma-separated primes")->delimiter(',');
  app.add_option("--max-prime", max_prime, "Verify every odd prime up to this bound");
  app.add_option("--mode", mode, "matrix, charsum or both")
      ->check(CLI::IsMember({"matrix", "charsum", "both"}))
      ->capture_default_str();
  app.add_option("--checks", checks, "Comma-separated subset of structure, dcosets, characters, decompose, "
                                     "relations, exactness, table2, nonvanishing")
      ->delimiter(',');
  app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  app.add_option("--out", out, "Output file (default stdout)");
  app.add_flag("--allow-large", allow_large, "Lift the p <= 19 limit on the matrix route");
  app.add_flag("--no-timing", no_timing, "Omit timing from the output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  primes.insert(primes.end(), prime_list.begin(), prime_list.end());
  if (max_prime) {
    for (std::uint32_t n = 3; n <= *max_prime; n += 2)
      if (odd_prime_candidate(n)) primes.push_back(n);
    if (primes.empty()) {
      std::fprintf(stderr, "verify: no odd primes up to %u\n", *max_prime);
      return kExitUsage;
    }
  }

  gl2h_config* config = nullptr;
  if (gl2h_config_create(&config) != GL2H_OK) return report_error("configuration");
  struct ConfigGuard {
    gl2h_config* c;
    ~ConfigGuard() { gl2h_config_destroy(c); }
  } config_guard{config};

  for (auto p : primes)
    if (gl2h_config_add_prime(config, p) != GL2H_OK) return report_error("--prime");
  static const std::map<std::string, gl2h_mode> modes{
      {"matrix", GL2H_MODE_MATRIX}, {"charsum", GL2H_MODE_CHARSUM}, {"both", GL2H_MODE_BOTH}};
  gl2h_config_set_mode(config, modes.at(mode));
  if (!checks.empty()) {
    std::string joined;
    for (const auto& c : checks) joined += (joined.empty() ? "" : ",") + c;
    if (gl2h_config_set_checks(config, joined.c_str()) != GL2H_OK) return report_error("--checks");
  }
  gl2h_config_set_allow_large(config, allow_large ? 1 : 0);

  gl2h_report* report = nullptr;
  if (gl2h_run(config, &report) != GL2H_OK) return report_error("cannot run");
  struct ReportGuard {
    gl2h_report* r;
    ~ReportGuard() { gl2h_report_destroy(r); }
  } report_guard{report};

  static const std::map<std::string, gl2h_format> formats{
      {"text", GL2H_FORMAT_TEXT}, {"json", GL2H_FORMAT_JSON}, {"csv", GL2H_FORMAT_CSV}};
  const gl2h_format f = formats.at(format);
  const int timing = no_timing ? 0 : 1;
  if (!out.empty()) {
    if (gl2h_report_write(report, f, timing, out.c_str()) != GL2H_OK) return report_error("--out");
  } else {
    char* text = nullptr;
    if (gl2h_report_render(report, f, timing, &text) != GL2H_OK) return report_error("render");
    std::fputs(text, stdout);
    gl2h_string_free(text);
  }
  return gl2h_report_passed(report) ? 0 : kExitFailure;
}
