#include <stdio.h>

static int table[8];

int main(void)
{
    int idx;
    int sum = 0;
    for (idx = 0; idx < 8; idx++) {
        table[idx] = idx * 3;
    }
    for (idx = 0; idx < 8; idx++) {
        sum += table[idx];
    }
    char buf[16];
    snprintf(buf, sizeof buf, "%d", sum);
    printf("sum=%s\n", buf);
    return 0;
}
