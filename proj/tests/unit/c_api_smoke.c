/*
 * Copyright (c) 2026, ACN model contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/* Compiled as C: the public header must stay valid C. */

#include <stdio.h>
#include <string.h>

#include "acn/acn.h"

int main(void) {
  acn_config *config = NULL;
  acn_vectors *vectors = NULL;
  char *csv = NULL;
  int ok;

  if (acn_config_reference(&config) != ACN_OK ||
      acn_vectors_reference(&vectors) != ACN_OK) {
    fprintf(stderr, "setup failed: %s\n", acn_last_error());
    return 1;
  }
  if (acn_simulate_csv(config, vectors, ACN_TL_IDEAL, ACN_CORNER_TT, 27.0, &csv) != ACN_OK) {
    fprintf(stderr, "simulate failed: %s\n", acn_last_error());
    return 1;
  }
  ok = strncmp(csv, "name,vector,", 12) == 0;
  acn_string_free(csv);
  acn_vectors_free(vectors);
  acn_config_free(config);
  printf("%s\n", ok ? "ok" : "unexpected header");
  return ok ? 0 : 1;
}
