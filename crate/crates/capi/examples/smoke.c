#include <stdio.h>
#include <string.h>
#include "picard0n.h"

int main(void) {
    uint64_t divisors = 0, dim = 0;
    if (p0n_num_divisors(6, &divisors) != P0N_STATUS_OK) return 1;
    if (p0n_dimension(6, &dim) != P0N_STATUS_OK) return 1;
    printf("n=6: %llu divisors, dimension %llu\n",
           (unsigned long long)divisors, (unsigned long long)dim);

    P0nOrder *order = NULL;
    if (p0n_order_standard(6, &order) != P0N_STATUS_OK) return 1;
    P0nBasis *basis = NULL;
    if (p0n_basis_new(order, &basis) != P0N_STATUS_OK) return 1;
    size_t len = p0n_basis_len(basis);

    uint32_t side[3] = {1, 2, 3};
    int64_t coeffs[64];
    if (p0n_expand(basis, side, 3, coeffs, 64) != P0N_STATUS_OK) return 1;
    printf("expand d{1,2,3}:");
    for (size_t i = 0; i < len; i++) {
        if (coeffs[i] == 0) continue;
        uint32_t labels[8]; size_t written = 0;
        p0n_basis_element(basis, i, labels, 8, &written);
        printf(" %+lld*d{", (long long)coeffs[i]);
        for (size_t j = 0; j < written; j++) printf(j ? ",%u" : "%u", labels[j]);
        printf("}");
    }
    printf("\n");

    char sig[128]; size_t sig_len = 0;
    uint32_t hex[5] = {1, 2, 4, 7, 10};
    P0nOrder *ten = NULL;
    p0n_order_standard(10, &ten);
    if (p0n_polygon_signature(ten, hex, 5, sig, sizeof sig, &sig_len) != P0N_STATUS_OK) return 1;
    printf("signature: %s\n", sig);

    uint64_t bogus;
    if (p0n_num_divisors(2, &bogus) != P0N_STATUS_INVALID_ARGUMENT) return 1;
    char err[256];
    p0n_last_error(err, sizeof err);
    printf("expected error: %s\n", err);

    p0n_basis_free(basis);
    p0n_order_free(order);
    p0n_order_free(ten);
    return 0;
}
