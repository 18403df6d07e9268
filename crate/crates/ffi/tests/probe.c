#include <math.h>
#include <stdio.h>

#include "hankel_zeta.h"

int main(void) {
    HzValue v;
    HzComplex two = {2.0, 0.0};
    if (hz_zeta_hankel(two, NULL, HZ_NEAR_INTEGER_RING, &v) != HZ_STATUS_OK) return 1;
    if (fabs(v.value.re - 1.6449340668482264) > 1e-10) return 2;

    HzComplex one = {1.0, 0.0};
    if (hz_zeta_hankel(one, NULL, HZ_NEAR_INTEGER_RING, &v) != HZ_STATUS_POLE) return 3;
    char msg[128];
    if (hz_last_error_message(msg, sizeof msg) == 0) return 4;

    HzZeroList *zeros = NULL;
    if (hz_find_zeros(1.0, 22.0, 10, &zeros) != HZ_STATUS_OK) return 5;
    if (hz_zero_list_len(zeros) != 2) return 6;
    HzZero first;
    if (hz_zero_list_get(zeros, 0, &first) != HZ_STATUS_OK) return 7;
    hz_zero_list_free(zeros);
    if (fabs(first.t - 14.134725141734694) > 1e-8) return 8;

    printf("ok\n");
    return 0;
}
