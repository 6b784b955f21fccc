/* Exercises the C interface from C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "coringlab/coringlab.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(int argc, char** argv) {
  const char* dir = argc > 1 ? argv[1] : ".";
  clab_algebra* f4 = NULL;
  EXPECT(clab_algebra_finite_field(2, 2, &f4) == CLAB_OK);
  EXPECT(clab_algebra_dim(f4) == 2);

  clab_coring* c = NULL;
  const uint32_t one[2] = {1, 0};
  EXPECT(clab_coring_sweedler(f4, one, 1, &c) == CLAB_OK);
  EXPECT(clab_coring_dim(c) == 4);
  size_t n = 0;
  uint32_t g[4];
  EXPECT(clab_coring_grouplike_get(c, 0, g) == CLAB_INVALID_ARGUMENT);
  EXPECT(clab_coring_grouplikes(c, 0, &n) == CLAB_OK);
  EXPECT(n == 3);
  for (size_t i = 0; i < n; ++i) {
    int galois = 0;
    EXPECT(clab_coring_grouplike_get(c, i, g) == CLAB_OK);
    EXPECT(clab_coring_is_galois(c, g, &galois) == CLAB_OK);
    EXPECT(galois == 1);
  }
  const uint32_t zero[4] = {0, 0, 0, 0};
  int galois = 0;
  EXPECT(clab_coring_is_galois(c, zero, &galois) == CLAB_NOT_A_GROUPLIKE);
  EXPECT(strstr(clab_last_error(), "NotAGrouplike") != NULL);
  EXPECT(clab_coring_grouplikes(c, 2, &n) == CLAB_TOO_LARGE);
  clab_coring_destroy(c);

  /* F2[e]/(e^2 - e) with e passed as the unit */
  uint32_t sc[8] = {1, 0, 0, 1, 0, 1, 0, 1};
  const uint32_t e[2] = {0, 1};
  clab_algebra* bad = NULL;
  EXPECT(clab_algebra_create(2, 2, sc, e, &bad) == CLAB_NO_UNIT);
  EXPECT(bad == NULL);
  EXPECT(clab_algebra_create(2, 2, NULL, one, &bad) == CLAB_INVALID_ARGUMENT);
  EXPECT(clab_algebra_finite_field(4, 2, &bad) == CLAB_NOT_PRIME);
  clab_algebra_destroy(f4);

  char path[4096];
  snprintf(path, sizeof path, "%s/sweedler_f4_f2.json", dir);
  clab_report* r = NULL;
  EXPECT(clab_run_file(path, NULL, 0, 0, &r) == CLAB_OK);
  EXPECT(clab_report_all_pass(r) == 1);
  EXPECT(strstr(clab_report_json(r), "\"verdict\": \"pass\"") != NULL);
  EXPECT(strstr(clab_report_summary(r), "all tasks pass") != NULL);
  clab_report_destroy(r);

  const char* tasks[1] = {"nope"};
  EXPECT(clab_run_file(path, tasks, 1, 0, &r) == CLAB_UNKNOWN_TASK);
  EXPECT(clab_run_file("/nonexistent.json", NULL, 0, 0, &r) == CLAB_PARSE_ERROR);

  const char* text = NULL;
  EXPECT(clab_explain("mejor", &text) == CLAB_OK && text && strlen(text) > 0);
  EXPECT(clab_explain("nope", &text) == CLAB_UNKNOWN_TASK);
  EXPECT(strcmp(clab_status_name(CLAB_NOT_COASSOCIATIVE), "NotCoassociative") == 0);
  EXPECT(strcmp(clab_status_name(CLAB_OK), "Ok") == 0);

  if (failures == 0) printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
