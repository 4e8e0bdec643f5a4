#include <stdio.h>

static void swap(int *a, int *b)
{
    int tmp = *a;
    *a = *b;
    *b = tmp;
}

int main(void)
{
    int left = 1, right = 2;
    int *lp = &left;
    swap(lp, &right);
    printf("%d %d\n", left, right);
    return 0;
}
