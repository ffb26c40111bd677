#include <stdio.h>
#include <string.h>

#include "hsymb.h"

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond, \
              hsymb_last_error());                                   \
      return 1;                                                      \
    }                                                                \
  } while (0)

int main(void) {
  HsymbElement *e = NULL;
  HsymbElement *h = NULL;
  char *out = NULL;

  CHECK(hsymb_parse("ILi[2](1,2)", HSYMB_SORT_HBAR, &e) == HSYMB_STATUS_OK);
  CHECK(hsymb_inv(e, &h) == HSYMB_STATUS_OK);
  CHECK(hsymb_render(h, HSYMB_FORMAT_TEXT, &out) == HSYMB_STATUS_OK);
  CHECK(strcmp(out, "-1/2*log(1)^2 - Li[2](1,2)") == 0);
  hsymb_string_free(out);

  CHECK(hsymb_coproduct(e, HSYMB_FORMAT_JSON, &out) == HSYMB_STATUS_OK);
  CHECK(strncmp(out, "{", 1) == 0);
  hsymb_string_free(out);

  uint32_t n[] = {2, 1};
  CHECK(hsymb_variation_matrix(n, 2, HSYMB_SORT_H, HSYMB_FORMAT_LATEX, &out) == HSYMB_STATUS_OK);
  CHECK(strstr(out, "\\begin{pmatrix}") == out);
  hsymb_string_free(out);

  HsymbElement *bad = NULL;
  CHECK(hsymb_parse("Li[1](2,1)", HSYMB_SORT_H, &bad) == HSYMB_STATUS_PARSE);
  CHECK(bad == NULL);
  CHECK(strlen(hsymb_last_error()) > 0);
  CHECK(hsymb_render(e, 42, &out) == HSYMB_STATUS_INVALID_ARGUMENT);

  hsymb_element_free(h);
  hsymb_element_free(e);
  printf("ok %s\n", hsymb_version());
  return 0;
}
