/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef MEMELEM_MEMELEM_H
#define MEMELEM_MEMELEM_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MEMELEM_API __declspec(dllexport)
#else
#define MEMELEM_API __attribute__((visibility("default")))
#endif

typedef enum memelem_status {
  MEMELEM_OK = 0,
  MEMELEM_ERR_INVALID_ARGUMENT = 1,
  MEMELEM_ERR_CONFIG = 2,
  MEMELEM_ERR_DOMAIN = 3,
  MEMELEM_ERR_CAPABILITY = 4,
  MEMELEM_ERR_NUMERICAL = 5,
  MEMELEM_ERR_CONSISTENCY = 6,
  MEMELEM_ERR_OUT_OF_SCOPE = 7,
  MEMELEM_ERR_INTERNAL = 8
} memelem_status;

/* Opaque constitutive curve. */
typedef struct memelem_curve memelem_curve;

/* Message and offending config field of the last failure on this thread.
 * Both are empty strings after a success; the pointers stay valid until the
 * next call on the same thread. */
MEMELEM_API const char* memelem_last_error(void);
MEMELEM_API const char* memelem_last_error_field(void);
MEMELEM_API const char* memelem_status_name(memelem_status status);
MEMELEM_API const char* memelem_version(void);

/* Strings returned through char** out-parameters. */
MEMELEM_API void memelem_string_free(char* s);

/* Curve from a JSON object ({"family": ..., "params": [...], ...}). */
MEMELEM_API memelem_status memelem_curve_from_json(const char* json, memelem_curve** out);
MEMELEM_API void memelem_curve_free(memelem_curve* curve);
MEMELEM_API memelem_status memelem_curve_eval(const memelem_curve* curve, double x, double* out);
MEMELEM_API memelem_status memelem_curve_derivative(const memelem_curve* curve, double x, int k,
                                                    double* out);
MEMELEM_API memelem_status memelem_mvt_point(const memelem_curve* curve, double a, double b,
                                             double* out);

/* level-th time derivative of offset - amplitude * cos(omega * t). */
MEMELEM_API memelem_status memelem_excite(double amplitude, double omega, double offset, double t,
                                          int level, double* out);

/* Classification with default excitation and tolerances; report as JSON. */
MEMELEM_API memelem_status memelem_classify(const memelem_curve* curve, int alpha, int beta,
                                            char** report_json);

/* Runs a config file. out_dir overrides the config's output_dir when non-NULL.
 * report_json may be NULL. */
MEMELEM_API memelem_status memelem_analyze(const char* config_path, const char* out_dir,
                                           char** report_json);

/* Writes the artifacts of one figure id (fig2, fig4, fig6, fig7, fig8, fig10). */
MEMELEM_API memelem_status memelem_figure(const char* id, const char* out_dir);

/* Theorem suite over a family list file; writes suite.json into out_dir.
 * all_passed and suite_json may be NULL. */
MEMELEM_API memelem_status memelem_suite(const char* families_path, const char* out_dir,
                                         int* all_passed, char** suite_json);

/* Parameter sweep; writes <name>.sweep.csv. rows may be NULL. */
MEMELEM_API memelem_status memelem_sweep(const char* config_path, const char* out_dir, int* rows);

#ifdef __cplusplus
}
#endif

#endif /* MEMELEM_MEMELEM_H */
