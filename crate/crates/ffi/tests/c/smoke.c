#include <stdio.h>
#include <stdlib.h>
#include <string.h>
#include "sombor.h"

int main(void) {
    SomborGraph *g = NULL;
    if (sombor_graph_build("D", 4, "commuting", "order", &g) != SOMBOR_STATUS_OK) return 1;
    size_t n = sombor_graph_order(g);
    double *eigs = malloc(n * sizeof(double));
    size_t written = 0;
    if (sombor_graph_spectrum(g, eigs, n, &written) != SOMBOR_STATUS_OK || written != 8) return 2;
    printf("%zu %.6f %.6f\n", n, eigs[0], eigs[n - 1]);
    free(eigs);
    sombor_graph_free(g);

    char *json = NULL;
    if (sombor_verify_json("SD", 3, "commuting", "order", NULL, &json) != SOMBOR_STATUS_OK) return 3;
    if (!strstr(json, "\"Pass\"")) return 4;
    sombor_string_free(json);

    if (sombor_graph_build("D", 2, "power", "equality", &g) != SOMBOR_STATUS_INVALID_ARGUMENT) return 5;
    if (strlen(sombor_last_error()) == 0) return 6;
    return 0;
}
