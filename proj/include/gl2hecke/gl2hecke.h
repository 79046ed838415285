#ifndef GL2HECKE_GL2HECKE_H
#define GL2HECKE_GL2HECKE_H

/* C interface to the GL_2(F_p) double coset operator verifier. */

#include <stddef.h>
#include <stdint.h>

#if defined(GL2H_BUILDING_LIBRARY)
#define GL2H_API __attribute__((visibility("default")))
#else
#define GL2H_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gl2h_status {
  GL2H_OK = 0,
  GL2H_ERR_INVALID_ARGUMENT = 1,
  GL2H_ERR_UNSUPPORTED_PRIME = 2,
  GL2H_ERR_RESOURCE_LIMIT = 3,
  GL2H_ERR_IO = 4,
  GL2H_ERR_INTERNAL = 5
} gl2h_status;

typedef enum gl2h_mode { GL2H_MODE_MATRIX = 0, GL2H_MODE_CHARSUM = 1, GL2H_MODE_BOTH = 2 } gl2h_mode;

typedef enum gl2h_format { GL2H_FORMAT_TEXT = 0, GL2H_FORMAT_JSON = 1, GL2H_FORMAT_CSV = 2 } gl2h_format;

typedef enum gl2h_check_status { GL2H_CHECK_PASS = 0, GL2H_CHECK_FAIL = 1, GL2H_CHECK_SKIPPED = 2 } gl2h_check_status;

typedef struct gl2h_config gl2h_config;
typedef struct gl2h_report gl2h_report;

/* Message for the most recent failing call on this thread ("" if none). */
GL2H_API const char* gl2h_last_error(void);

/* Defaults: primes 3..19, mode both, every check, thread count from
 * GL2H_THREADS. */
GL2H_API gl2h_status gl2h_config_create(gl2h_config** out);
GL2H_API void gl2h_config_destroy(gl2h_config* config);

/* The first call replaces the default prime list. Primes are validated by
 * gl2h_run. */
GL2H_API gl2h_status gl2h_config_add_prime(gl2h_config* config, uint32_t p);
GL2H_API gl2h_status gl2h_config_set_mode(gl2h_config* config, gl2h_mode mode);
/* Comma-separated check names, e.g. "structure,table2". */
GL2H_API gl2h_status gl2h_config_set_checks(gl2h_config* config, const char* checks);
GL2H_API gl2h_status gl2h_config_set_allow_large(gl2h_config* config, int allow);
GL2H_API gl2h_status gl2h_config_set_threads(gl2h_config* config, unsigned threads);

/* Runs the configured checks. Verification failures are reported through
 * gl2h_report_passed, not the status. */
GL2H_API gl2h_status gl2h_run(const gl2h_config* config, gl2h_report** out);
GL2H_API void gl2h_report_destroy(gl2h_report* report);

GL2H_API int gl2h_report_passed(const gl2h_report* report);
GL2H_API size_t gl2h_report_prime_count(const gl2h_report* report);
GL2H_API size_t gl2h_report_check_count(const gl2h_report* report, size_t prime_index);
/* Any output pointer may be NULL. Strings stay valid while the report lives. */
GL2H_API gl2h_status gl2h_report_check(const gl2h_report* report, size_t prime_index, size_t check_index,
                                       uint32_t* prime, const char** check_name, gl2h_check_status* status,
                                       const char** detail);

/* Renders the report. The returned string is released with gl2h_string_free. */
GL2H_API gl2h_status gl2h_report_render(const gl2h_report* report, gl2h_format format, int include_timing, char** out);
GL2H_API gl2h_status gl2h_report_write(const gl2h_report* report, gl2h_format format, int include_timing,
                                       const char* path);
GL2H_API void gl2h_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
