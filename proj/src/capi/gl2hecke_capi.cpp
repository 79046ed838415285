#include "gl2hecke/gl2hecke.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "core/errors.hpp"
#include "core/suite.hpp"

struct gl2h_config {
  gl2h::SuiteConfig config;
  bool primes_set = false;
};

struct gl2h_report {
  gl2h::VerificationReport report;
  std::vector<std::vector<std::string>> check_names;
};

namespace {

thread_local std::string last_error;

gl2h_status fail(gl2h_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

gl2h_status translate(gl2h::ErrorCode code) {
  switch (code) {
    case gl2h::ErrorCode::InvalidArgument: return GL2H_ERR_INVALID_ARGUMENT;
    case gl2h::ErrorCode::UnsupportedPrime: return GL2H_ERR_UNSUPPORTED_PRIME;
    case gl2h::ErrorCode::ResourceLimit: return GL2H_ERR_RESOURCE_LIMIT;
    case gl2h::ErrorCode::Io: return GL2H_ERR_IO;
    case gl2h::ErrorCode::Internal: return GL2H_ERR_INTERNAL;
  }
  return GL2H_ERR_INTERNAL;
}

template <class F>
gl2h_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const gl2h::Error& e) {
    return fail(translate(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GL2H_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(GL2H_ERR_INTERNAL, e.what());
  }
}

bool to_format(gl2h_format f, gl2h::OutputFormat& out) {
  switch (f) {
    case GL2H_FORMAT_TEXT: out = gl2h::OutputFormat::Text; return true;
    case GL2H_FORMAT_JSON: out = gl2h::OutputFormat::Json; return true;
    case GL2H_FORMAT_CSV: out = gl2h::OutputFormat::Csv; return true;
  }
  return false;
}

}  // namespace

extern "C" {

const char* gl2h_last_error(void) { return last_error.c_str(); }

gl2h_status gl2h_config_create(gl2h_config** out) {
  if (out == nullptr) return fail(GL2H_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    auto* c = new gl2h_config;
    c->config.threads = gl2h::threads_from_environment();
    *out = c;
    return GL2H_OK;
  });
}

void gl2h_config_destroy(gl2h_config* config) { delete config; }

gl2h_status gl2h_config_add_prime(gl2h_config* config, uint32_t p) {
  if (config == nullptr) return fail(GL2H_ERR_INVALID_ARGUMENT, "null config");
  return guarded([&] {
    if (!config->primes_set) {
      config->config.primes.clear();
      config->primes_set = true;
    }
    config->config.primes.push_back(p);
    return GL2H_OK;
  });
}

gl2h_status gl2h_config_set_mode(gl2h_config* config, gl2h_mode mode) {
  if (config == nullptr) return fail(GL2H_ERR_INVALID_ARGUMENT, "null config");
  switch (mode) {
    case GL2H_MODE_MATRIX: config->config.mode = gl2h::Mode::Matrix; break;
    case GL2H_MODE_CHARSUM: config->config.mode = gl2h::Mode::Charsum; break;
    case GL2H_MODE_BOTH: config->config.mode = gl2h::Mode::Both; break;
    default: return fail(GL2H_ERR_INVALID_ARGUMENT, "unknown mode");
  }
  last_error.clear();
  return GL2H_OK;
}

gl2h_status gl2h_config_set_checks(gl2h_config* config, const char* checks) {
  if (config == nullptr || checks == nullptr) return fail(GL2H_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<gl2h::Check> parsed;
    std::string_view rest(checks);
    while (true) {
      const auto comma = rest.find(',');
      const auto name = rest.substr(0, comma);
      const auto c = gl2h::parse_check(name);
      if (!c) return fail(GL2H_ERR_INVALID_ARGUMENT, "unknown check '" + std::string(name) + "'");
      parsed.push_back(*c);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    config->config.checks = parsed;
    return GL2H_OK;
  });
}

gl2h_status gl2h_config_set_allow_large(gl2h_config* config, int allow) {
  if (config == nullptr) return fail(GL2H_ERR_INVALID_ARGUMENT, "null config");
  config->config.allow_large = allow != 0;
  last_error.clear();
  return GL2H_OK;
}

gl2h_status gl2h_config_set_threads(gl2h_config* config, unsigned threads) {
  if (config == nullptr || threads == 0) return fail(GL2H_ERR_INVALID_ARGUMENT, "thread count must be positive");
  config->config.threads = threads;
  last_error.clear();
  return GL2H_OK;
}

gl2h_status gl2h_run(const gl2h_config* config, gl2h_report** out) {
  if (config == nullptr || out == nullptr) return fail(GL2H_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto* r = new gl2h_report;
    try {
      r->report = gl2h::run_suite(config->config);
    } catch (...) {
      delete r;
      throw;
    }
    for (const auto& pr : r->report.primes) {
      auto& names = r->check_names.emplace_back();
      for (const auto& c : pr.results) names.emplace_back(gl2h::check_name(c.check));
    }
    *out = r;
    return GL2H_OK;
  });
}

void gl2h_report_destroy(gl2h_report* report) { delete report; }

int gl2h_report_passed(const gl2h_report* report) { return report != nullptr && report->report.passed() ? 1 : 0; }

size_t gl2h_report_prime_count(const gl2h_report* report) { return report ? report->report.primes.size() : 0; }

size_t gl2h_report_check_count(const gl2h_report* report, size_t prime_index) {
  if (report == nullptr || prime_index >= report->report.primes.size()) return 0;
  return report->report.primes[prime_index].results.size();
}

gl2h_status gl2h_report_check(const gl2h_report* report, size_t prime_index, size_t check_index, uint32_t* prime,
                              const char** check_name, gl2h_check_status* status, const char** detail) {
  if (report == nullptr) return fail(GL2H_ERR_INVALID_ARGUMENT, "null report");
  if (prime_index >= report->report.primes.size() ||
      check_index >= report->report.primes[prime_index].results.size()) {
    return fail(GL2H_ERR_INVALID_ARGUMENT, "index out of range");
  }
  const auto& pr = report->report.primes[prime_index];
  const auto& r = pr.results[check_index];
  if (prime) *prime = pr.p;
  if (check_name) *check_name = report->check_names[prime_index][check_index].c_str();
  if (status) {
    *status = r.status == gl2h::Status::Pass   ? GL2H_CHECK_PASS
              : r.status == gl2h::Status::Fail ? GL2H_CHECK_FAIL
                                               : GL2H_CHECK_SKIPPED;
  }
  if (detail) *detail = r.detail.c_str();
  last_error.clear();
  return GL2H_OK;
}

gl2h_status gl2h_report_render(const gl2h_report* report, gl2h_format format, int include_timing, char** out) {
  if (report == nullptr || out == nullptr) return fail(GL2H_ERR_INVALID_ARGUMENT, "null argument");
  gl2h::OutputFormat f;
  if (!to_format(format, f)) return fail(GL2H_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    const std::string text = gl2h::render(report->report, f, include_timing != 0);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (buf == nullptr) return fail(GL2H_ERR_RESOURCE_LIMIT, "out of memory");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return GL2H_OK;
  });
}

gl2h_status gl2h_report_write(const gl2h_report* report, gl2h_format format, int include_timing, const char* path) {
  if (report == nullptr || path == nullptr) return fail(GL2H_ERR_INVALID_ARGUMENT, "null argument");
  gl2h::OutputFormat f;
  if (!to_format(format, f)) return fail(GL2H_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) return fail(GL2H_ERR_IO, std::string("cannot open ") + path + " for writing");
    os << gl2h::render(report->report, f, include_timing != 0);
    os.flush();
    if (!os) return fail(GL2H_ERR_IO, std::string("write to ") + path + " failed");
    return GL2H_OK;
  });
}

void gl2h_string_free(char* s) { std::free(s); }

}  // extern "C"
