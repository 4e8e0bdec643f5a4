#include <stdio.h>

#define LIMIT 5
#define SQUARE(v) ((v) * (v))

int main(void)
{
    int v = 3;
    int result = SQUARE(v) + LIMIT;
    int limit = LIMIT;
    printf("%d %d\n", result, limit);
    return 0;
}
