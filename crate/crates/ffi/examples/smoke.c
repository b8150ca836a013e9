#include <stdio.h>
#include <string.h>

#include "schubert.h"

int main(void) {
    SchubertPerm *w = NULL;
    if (schubert_perm_parse("31542", &w) != SCHUBERT_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", schubert_last_error());
        return 1;
    }
    SchubertBasis *basis = NULL;
    if (schubert_reduced_basis(w, SCHUBERT_ORDER_ANTIDIAG, &basis) != SCHUBERT_STATUS_OK) {
        return 1;
    }
    size_t cubics = 0;
    for (size_t k = 0; k < schubert_basis_len(basis); k++) {
        uint32_t degree = 0;
        size_t terms = 0;
        schubert_basis_member_shape(basis, k, &degree, &terms);
        if (degree == 3 && terms == 4) {
            cubics++;
        }
    }
    SchubertShapeRegularity reg;
    if (schubert_shape_regularity("6,4,1,1,1", 22, &reg) != SCHUBERT_STATUS_OK) {
        return 1;
    }
    SchubertPerm *bad = NULL;
    SchubertStatus status = schubert_perm_parse("3155", &bad);
    printf("members=%zu cubics=%zu rrw=%zu ads=%zu bad=%d\n", schubert_basis_len(basis), cubics, reg.rrw, reg.ads,
           (int)status);
    schubert_basis_free(basis);
    schubert_perm_free(w);
    return 0;
}
