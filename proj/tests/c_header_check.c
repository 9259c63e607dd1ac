/* The public header must compile as plain C and the shared library must be
 * usable without any C++ toolchain on the client side. */

#include <stdio.h>
#include <string.h>

#include "qegraph/qegraph.h"

int main(void) {
    if (strlen(qeg_version()) == 0) {
        return 1;
    }

    qeg_graph* g = NULL;
    if (qeg_graph_generate("petersen", &g) != QEG_OK) {
        fprintf(stderr, "generate failed: %s\n", qeg_last_error());
        return 1;
    }

    qeg_report rep;
    if (qeg_qec_numeric(g, &rep) != QEG_OK) {
        fprintf(stderr, "qec failed: %s\n", qeg_last_error());
        qeg_graph_free(g);
        return 1;
    }
    qeg_graph_free(g);

    if (rep.qe_class != QEG_QE_BOUNDARY) {
        fprintf(stderr, "unexpected class for the Petersen graph\n");
        return 1;
    }
    printf("qegraph %s: petersen qec within band of 0\n", qeg_version());
    return 0;
}
