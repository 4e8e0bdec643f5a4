#include <stdio.h>

int main(void)
{
    double ratio = 7.0 / 2.0;
    int whole = (int)ratio;
    long big = (long)whole * 1000L;
    int sign = ratio > 3.0 ? 1 : -1;
    printf("%.2f %d %ld %d\n", ratio, whole, big, sign);
    return 0;
}
