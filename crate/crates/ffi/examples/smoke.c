#include <stdio.h>

#include "powerdom.h"

int main(void) {
    PdGraph *g = NULL;
    if (pd_graph_from_family("kmn:5,2", &g) != PD_STATUS_OK) {
        fprintf(stderr, "error: %s\n", pd_last_error_message());
        return 1;
    }
    PdSolverOptions opts = pd_solver_options_default();
    opts.canonical = true;
    size_t witness[8];
    PdSolverResult r;
    PdStatus st = pd_solve(g, PD_PARAMETER_GAMMA_BAR_P, &opts, witness, 8, &r);
    if (st != PD_STATUS_OK) {
        fprintf(stderr, "error: %s\n", pd_last_error_message());
        pd_graph_free(g);
        return 1;
    }
    printf("gamma_bar_p = %zu, witness = {", r.value);
    for (size_t i = 0; i < r.witness_len; i++) {
        printf(i ? ", %zu" : "%zu", witness[i]);
    }
    printf("}\n");

    PdClassification c;
    pd_classify(g, witness, r.witness_len, &c);
    printf("witness is_fpds = %d\n", c.is_fpds);
    pd_graph_free(g);
    return 0;
}
