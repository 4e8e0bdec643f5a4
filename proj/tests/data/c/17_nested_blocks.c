#include <stdio.h>

int main(void)
{
    int outer = 10;
    if (outer > 5) {
        int inner = outer - 5;
        {
            int deepest = inner * 2;
            outer += deepest;
        }
        outer += inner;
    }
    printf("outer=%d\n", outer);
    return 0;
}
