#include <stdio.h>

typedef unsigned int uint_t;
typedef struct pair { int first; int second; } pair_t;

int main(void)
{
    uint_t n = 42;
    pair_t pr;
    pr.first = 1;
    pr.second = 2;
    uint_t *np = &n;
    printf("%u %d %d\n", *np, pr.first, pr.second);
    return 0;
}
