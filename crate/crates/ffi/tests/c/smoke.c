#include <stdio.h>
#include <string.h>
#include "hopfcd.h"

int main(void) {
    HcdElement *x = NULL, *y = NULL, *xy = NULL;
    char *s = NULL;
    if (hcd_element_basis(3, 1, &x) != HCD_STATUS_OK) return 1;
    if (hcd_element_basis(3, 2, &y) != HCD_STATUS_OK) return 1;
    if (hcd_element_mul(x, y, &xy) != HCD_STATUS_OK) return 1;
    if (hcd_element_to_json(xy, &s) != HCD_STATUS_OK) return 1;
    int ok = strcmp(s, "[\"0\",\"0\",\"0\",\"1\",\"0\",\"0\",\"0\",\"0\"]") == 0;
    printf("%s\n", s);
    hcd_string_free(s);
    HcdElement *bad = NULL;
    if (hcd_element_basis(3, 8, &bad) != HCD_STATUS_INVALID_ARGUMENT) return 1;
    printf("%s\n", hcd_last_error());
    hcd_element_free(x);
    hcd_element_free(y);
    hcd_element_free(xy);
    return ok ? 0 : 1;
}
