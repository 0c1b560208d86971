/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
/* Exercises the shared library through its C header only. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "memelem/memelem.h"

static int failures = 0;

#define CHECK(cond)                                               \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: CHECK(%s)\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(int argc, char** argv) {
  const char* scratch = argc > 1 ? argv[1] : "c_api_out";
  memelem_curve* cubic = NULL;
  double v = 0.0;
  char* json = NULL;
  char path[1024];

  CHECK(memelem_curve_from_json("{\"family\": \"polynomial\", \"params\": [0, 1, 0, 0.3333333333333333]}",
                                &cubic) == MEMELEM_OK);
  CHECK(cubic != NULL);
  CHECK(memelem_curve_eval(cubic, 1.0, &v) == MEMELEM_OK && fabs(v - 4.0 / 3.0) < 1e-15);
  CHECK(memelem_curve_derivative(cubic, 1.0, 2, &v) == MEMELEM_OK && fabs(v - 2.0) < 1e-15);
  CHECK(memelem_mvt_point(cubic, 0.0, 2.0, &v) == MEMELEM_OK && fabs(v - 2.0 / sqrt(3.0)) < 1e-9);
  CHECK(memelem_excite(1.0, 1.0, 1.0, 0.5, 1, &v) == MEMELEM_OK && fabs(v - sin(0.5)) < 1e-15);

  CHECK(memelem_curve_eval(cubic, 3.0, &v) == MEMELEM_ERR_DOMAIN);
  CHECK(strlen(memelem_last_error()) > 0);
  CHECK(memelem_curve_eval(cubic, 1.0, &v) == MEMELEM_OK);
  CHECK(strlen(memelem_last_error()) == 0);
  CHECK(memelem_curve_eval(NULL, 1.0, &v) == MEMELEM_ERR_INVALID_ARGUMENT);

  CHECK(memelem_classify(cubic, -2, -2, &json) == MEMELEM_OK);
  CHECK(json != NULL && strstr(json, "\"verdict\": \"LocallyActive\"") != NULL);
  memelem_string_free(json);
  json = NULL;
  CHECK(memelem_classify(cubic, 1, -1, &json) == MEMELEM_ERR_OUT_OF_SCOPE);
  CHECK(json == NULL);

  memelem_curve* bad = NULL;
  CHECK(memelem_curve_from_json("{\"family\": \"spline\"}", &bad) == MEMELEM_ERR_CONFIG);
  CHECK(bad == NULL);
  CHECK(strcmp(memelem_last_error_field(), "curve.family") == 0);

  snprintf(path, sizeof path, "%s/figures", scratch);
  CHECK(memelem_figure("fig6", path) == MEMELEM_OK);
  CHECK(memelem_figure("fig99", path) == MEMELEM_ERR_CONFIG);
  CHECK(strcmp(memelem_last_error_field(), "figure") == 0);
  CHECK(memelem_analyze("/nonexistent/config.json", NULL, NULL) == MEMELEM_ERR_CONFIG);

  CHECK(strcmp(memelem_status_name(MEMELEM_ERR_NUMERICAL), "numerical error") == 0);
  memelem_curve_free(cubic);
  memelem_curve_free(NULL);

  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
