#include <stdio.h>
#include "polygraph.h"

int main(void) {
    PgProduct *p = NULL;
    PgElement *a = NULL, *b = NULL, *m = NULL;
    char *s = NULL;
    if (pg_product_parse("vertex x1 mono\nvertex x2 mono\nedge x1 x2\n", &p) != PG_STATUS_OK) {
        fprintf(stderr, "%s\n", pg_last_error());
        return 1;
    }
    pg_element_parse(p, "x1", &a);
    pg_element_parse(p, "x2", &b);
    if (pg_element_lclm(a, b, &m, NULL, NULL) == PG_STATUS_OK && pg_element_to_string(m, &s) == PG_STATUS_OK) {
        puts(s);
        pg_string_free(s);
    }
    pg_element_free(m);
    pg_element_free(b);
    pg_element_free(a);
    pg_product_free(p);
    return 0;
}
