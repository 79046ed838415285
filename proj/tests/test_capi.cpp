#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gl2hecke/gl2hecke.h"

namespace {

struct Config {
  gl2h_config* c = nullptr;
  Config() { REQUIRE(gl2h_config_create(&c) == GL2H_OK); }
  ~Config() { gl2h_config_destroy(c); }
};

struct Report {
  gl2h_report* r = nullptr;
  ~Report() { gl2h_report_destroy(r); }
};

std::string render(const gl2h_report* r, gl2h_format f) {
  char* text = nullptr;
  REQUIRE(gl2h_report_render(r, f, 0, &text) == GL2H_OK);
  std::string out(text);
  gl2h_string_free(text);
  return out;
}

}  // namespace

TEST_CASE("table2 at p = 3 through the C interface") {
  Config cfg;
  REQUIRE(gl2h_config_add_prime(cfg.c, 3) == GL2H_OK);
  REQUIRE(gl2h_config_set_checks(cfg.c, "table2") == GL2H_OK);
  Report rep;
  REQUIRE(gl2h_run(cfg.c, &rep.r) == GL2H_OK);
  CHECK(gl2h_report_passed(rep.r) == 1);
  CHECK(gl2h_report_prime_count(rep.r) == 1);
  CHECK(gl2h_report_check_count(rep.r, 0) == 1);
  uint32_t p = 0;
  const char* name = nullptr;
  gl2h_check_status status = GL2H_CHECK_FAIL;
  REQUIRE(gl2h_report_check(rep.r, 0, 0, &p, &name, &status, nullptr) == GL2H_OK);
  CHECK(p == 3);
  CHECK(std::string(name) == "table2");
  CHECK(status == GL2H_CHECK_PASS);
  CHECK(gl2h_report_check(rep.r, 0, 1, nullptr, nullptr, nullptr, nullptr) == GL2H_ERR_INVALID_ARGUMENT);
  const auto json = render(rep.r, GL2H_FORMAT_JSON);
  CHECK(json.find("\"det_total\": \"8\"") != std::string::npos);
  CHECK(json.find("\"timing\"") == std::string::npos);
  CHECK(render(rep.r, GL2H_FORMAT_CSV) == render(rep.r, GL2H_FORMAT_CSV));
}

TEST_CASE("configuration errors carry status codes") {
  {
    Config cfg;
    gl2h_config_add_prime(cfg.c, 2);
    Report rep;
    CHECK(gl2h_run(cfg.c, &rep.r) == GL2H_ERR_UNSUPPORTED_PRIME);
    CHECK(std::string(gl2h_last_error()).find("odd prime") != std::string::npos);
  }
  {
    Config cfg;
    gl2h_config_add_prime(cfg.c, 21);
    Report rep;
    CHECK(gl2h_run(cfg.c, &rep.r) == GL2H_ERR_UNSUPPORTED_PRIME);
  }
  {
    Config cfg;
    gl2h_config_add_prime(cfg.c, 23);
    gl2h_config_set_mode(cfg.c, GL2H_MODE_MATRIX);
    Report rep;
    CHECK(gl2h_run(cfg.c, &rep.r) == GL2H_ERR_RESOURCE_LIMIT);
  }
  Config cfg;
  CHECK(gl2h_config_set_checks(cfg.c, "table2,bogus") == GL2H_ERR_INVALID_ARGUMENT);
  CHECK(std::string(gl2h_last_error()).find("bogus") != std::string::npos);
  CHECK(gl2h_config_set_threads(cfg.c, 0) == GL2H_ERR_INVALID_ARGUMENT);
  CHECK(gl2h_config_set_mode(cfg.c, static_cast<gl2h_mode>(9)) == GL2H_ERR_INVALID_ARGUMENT);
  CHECK(gl2h_config_create(nullptr) == GL2H_ERR_INVALID_ARGUMENT);
  CHECK(gl2h_run(nullptr, nullptr) == GL2H_ERR_INVALID_ARGUMENT);
}

TEST_CASE("charsum mode beyond the enumeration limit skips matrix checks") {
  Config cfg;
  gl2h_config_add_prime(cfg.c, 23);
  gl2h_config_set_mode(cfg.c, GL2H_MODE_CHARSUM);
  gl2h_config_set_checks(cfg.c, "structure,nonvanishing,table2");
  Report rep;
  REQUIRE(gl2h_run(cfg.c, &rep.r) == GL2H_OK);
  CHECK(gl2h_report_passed(rep.r) == 1);
  gl2h_check_status s0, s1, s2;
  gl2h_report_check(rep.r, 0, 0, nullptr, nullptr, &s0, nullptr);
  gl2h_report_check(rep.r, 0, 1, nullptr, nullptr, &s1, nullptr);
  gl2h_report_check(rep.r, 0, 2, nullptr, nullptr, &s2, nullptr);
  CHECK(s0 == GL2H_CHECK_SKIPPED);
  CHECK(s1 == GL2H_CHECK_PASS);
  CHECK(s2 == GL2H_CHECK_PASS);
}

TEST_CASE("threads do not change the output") {
  std::string outputs[2];
  for (unsigned threads : {1u, 3u}) {
    Config cfg;
    for (uint32_t p : {7u, 3u, 5u, 3u}) gl2h_config_add_prime(cfg.c, p);
    gl2h_config_set_checks(cfg.c, "table2,dcosets");
    gl2h_config_set_threads(cfg.c, threads);
    Report rep;
    REQUIRE(gl2h_run(cfg.c, &rep.r) == GL2H_OK);
    CHECK(gl2h_report_prime_count(rep.r) == 3);
    outputs[threads == 1 ? 0 : 1] = render(rep.r, GL2H_FORMAT_JSON);
  }
  CHECK(outputs[0] == outputs[1]);
}

TEST_CASE("writing to a file") {
  Config cfg;
  gl2h_config_add_prime(cfg.c, 5);
  gl2h_config_set_checks(cfg.c, "table2");
  Report rep;
  REQUIRE(gl2h_run(cfg.c, &rep.r) == GL2H_OK);
  const std::string path = "capi_report.csv";
  REQUIRE(gl2h_report_write(rep.r, GL2H_FORMAT_CSV, 0, path.c_str()) == GL2H_OK);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "prime,check,status,detail\n5,table2,pass,6/6 assertions\n");
  std::remove(path.c_str());
  CHECK(gl2h_report_write(rep.r, GL2H_FORMAT_CSV, 0, "/nonexistent-dir/x.csv") == GL2H_ERR_IO);
}
