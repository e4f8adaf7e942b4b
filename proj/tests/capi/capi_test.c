/* Copyright (C) 2026 The simpres Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

/* Exercises the C interface from plain C. */

#include <stdio.h>
#include <string.h>

#include "simpres/simpres.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static const char* fixture(const char* name) {
  static char buf[1024];
  snprintf(buf, sizeof buf, "%s/%s", SIMPRES_FIXTURE_DIR, name);
  return buf;
}

static void test_metadata(void) {
  int sign = 0;
  EXPECT(strlen(simpres_version()) > 0);
  EXPECT(simpres_chain_homotopy_sign() == 1);
  EXPECT(simpres_calibrate_chain_homotopy_sign(&sign) == SIMPRES_OK);
  EXPECT(sign == simpres_chain_homotopy_sign());
  EXPECT(simpres_calibrate_chain_homotopy_sign(NULL) == SIMPRES_ERR_ARGUMENT);
  EXPECT(strcmp(simpres_status_name(SIMPRES_ERR_PARSE), "parse error") == 0);
}

static void test_homology(void) {
  static const size_t expected[] = {2, 1, 1, 1, 1};
  simpres_options* o = NULL;
  simpres_result* r = NULL;
  size_t k, v = 0;
  EXPECT(simpres_options_new(&o) == SIMPRES_OK);
  EXPECT(simpres_options_set_oracle(o, 1) == SIMPRES_OK);
  EXPECT(simpres_options_set_max_degree(o, 4) == SIMPRES_OK);
  EXPECT(simpres_run_file("homology", fixture("dual_numbers.json"), o, &r) == SIMPRES_OK);
  EXPECT(simpres_result_exit_code(r) == SIMPRES_EXIT_OK);
  EXPECT(strcmp(simpres_result_status(r), "ok") == 0);
  EXPECT(simpres_result_degree_count(r) == 5);
  for (k = 0; k < 5; ++k) {
    EXPECT(simpres_result_value(r, "betti", k, &v) == SIMPRES_OK && v == expected[k]);
    EXPECT(simpres_result_value(r, "oracle", k, &v) == SIMPRES_OK && v == expected[k]);
  }
  EXPECT(simpres_result_value(r, "torsion", 0, &v) == SIMPRES_ERR_ARGUMENT);
  EXPECT(simpres_result_value(r, "betti", 5, &v) == SIMPRES_ERR_ARGUMENT);
  EXPECT(strstr(simpres_result_tsv(r), "## betti") != NULL);
  EXPECT(strstr(simpres_result_json(r), "\"betti\"") != NULL);
  simpres_result_free(r);

  EXPECT(simpres_options_set_dim_cap(o, 10) == SIMPRES_OK);
  EXPECT(simpres_run_file("homology", fixture("dual_numbers.json"), o, &r) == SIMPRES_OK);
  EXPECT(simpres_result_exit_code(r) == SIMPRES_EXIT_FAILURE);
  EXPECT(strcmp(simpres_result_status(r), "refused") == 0);
  EXPECT(simpres_result_message_count(r) == 1);
  EXPECT(strstr(simpres_result_message(r, 0), "ambient dimension") != NULL);
  simpres_result_free(r);
  simpres_options_free(o);
}

static void test_documents(void) {
  simpres_document* d = NULL;
  simpres_result* r = NULL;
  EXPECT(simpres_document_parse("{not json", "x", &d) == SIMPRES_ERR_PARSE);
  EXPECT(strlen(simpres_last_error()) > 0);
  EXPECT(simpres_document_parse(
             "{\"algebras\": {\"A\": {\"dim\": 1, \"unit\": [\"1/0\"], \"products\": [[[\"1\"]]]}}}",
             "x", &d) == SIMPRES_ERR_PARSE);
  EXPECT(simpres_document_load(fixture("no_such_file.json"), &d) == SIMPRES_ERR_PARSE);
  EXPECT(simpres_document_load(NULL, &d) == SIMPRES_ERR_ARGUMENT);

  EXPECT(simpres_document_load(fixture("bad_associativity.json"), &d) == SIMPRES_OK);
  EXPECT(strcmp(simpres_document_name(d), "bad_associativity") == 0);
  EXPECT(simpres_run_document("check", d, NULL, &r) == SIMPRES_OK);
  EXPECT(simpres_result_exit_code(r) == SIMPRES_EXIT_FAILURE);
  EXPECT(simpres_result_failure_count(r) == 4);
  EXPECT(strstr(simpres_result_tsv(r), "basis triple (1,1,2)") != NULL);
  simpres_result_free(r);
  EXPECT(simpres_run_document("frobnicate", d, NULL, &r) == SIMPRES_OK);
  EXPECT(simpres_result_exit_code(r) == SIMPRES_EXIT_USAGE);
  simpres_result_free(r);
  simpres_document_free(d);
}

static void test_homotopy(void) {
  simpres_result* r = NULL;
  size_t s = 0, t = 0, k;
  EXPECT(simpres_run_file("homotopy-verify", fixture("homotopy_central_twist.json"), NULL, &r) ==
         SIMPRES_OK);
  EXPECT(simpres_result_exit_code(r) == SIMPRES_EXIT_OK);
  EXPECT(simpres_result_failure_count(r) == 0);
  for (k = 0; k < simpres_result_degree_count(r); ++k) {
    EXPECT(simpres_result_value(r, "source", k, &s) == SIMPRES_OK);
    EXPECT(simpres_result_value(r, "target", k, &t) == SIMPRES_OK);
    EXPECT(s == t);
  }
  simpres_result_free(r);
  EXPECT(simpres_run_file("homotopy-verify", fixture("homotopy_faulty.json"), NULL, &r) ==
         SIMPRES_OK);
  EXPECT(simpres_result_exit_code(r) == SIMPRES_EXIT_FAILURE);
  EXPECT(strstr(simpres_result_tsv(r), "delta_0 h_0 = f") != NULL);
  simpres_result_free(r);
  EXPECT(simpres_run_file("homology", NULL, NULL, &r) == SIMPRES_ERR_ARGUMENT);
}

int main(void) {
  test_metadata();
  test_homology();
  test_documents();
  test_homotopy();
  if (failures) {
    fprintf(stderr, "%d C API expectation(s) failed\n", failures);
    return 1;
  }
  printf("C API: all expectations hold\n");
  return 0;
}
