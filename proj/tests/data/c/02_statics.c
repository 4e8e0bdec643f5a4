#include <stdio.h>

static int counter = 0;
static const char *label = "count";
extern int puts(const char *s);

static void bump(int by)
{
    counter += by;
}

int main(void)
{
    bump(3);
    bump(4);
    printf("%s=%d\n", label, counter);
    return 0;
}
