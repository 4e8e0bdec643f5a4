#include <stdio.h>

int main(void)
{
    unsigned long n = 27;
    unsigned long steps = 0;
    while (n != 1) {
        if (n % 2 == 0)
            n = n / 2;
        else
            n = 3 * n + 1;
        steps++;
    }
    printf("steps=%lu\n", steps);
    return 0;
}
