/* Build from crates/ffi after `cargo build --release -p stabtool-ffi`:
 *   cc examples/smoke.c -Iinclude -L../../target/release -l:libstabtool_ffi.a -lm -lpthread -ldl
 */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>

#include "stabtool.h"

int main(void) {
    double h = 1.0 / sqrt(2.0);
    double bell[8] = {h, 0, 0, 0, 0, 0, h, 0};
    StabDiagnosis d;
    if (stab_verify_state(bell, 4, &d) != STAB_STATUS_OK || !d.accepted) {
        fprintf(stderr, "bell state rejected: %s\n", stab_last_error());
        return 1;
    }

    StabCheckMatrix *m = NULL;
    if (stab_state_to_check(bell, 4, &m) != STAB_STATUS_OK) {
        fprintf(stderr, "%s\n", stab_last_error());
        return 1;
    }
    char row[16];
    for (size_t i = 0; i < stab_check_matrix_qubits(m); i++) {
        stab_check_matrix_row(m, i, row, sizeof row);
        printf("check row %zu: %s\n", i, row);
    }
    stab_check_matrix_free(m);

    double t_gate[8] = {1, 0, 0, 0, 0, 0, h, h};
    stab_verify_gate(t_gate, 2, &d);
    printf("T gate accepted: %d, reason %d, witness %lld\n", d.accepted, (int)d.reason, (long long)d.witness);
    return d.accepted ? 1 : 0;
}
