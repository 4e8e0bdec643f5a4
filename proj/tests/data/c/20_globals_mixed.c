#include <stdio.h>

int shared_total = 0;
static int hidden_total = 0;

static void add(int amount)
{
    shared_total += amount;
    hidden_total += amount * 2;
}

int main(void)
{
    int step;
    for (step = 0; step < 3; step++)
        add(step);
    printf("%d %d\n", shared_total, hidden_total);
    return 0;
}
