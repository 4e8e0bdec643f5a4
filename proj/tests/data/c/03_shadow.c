#include <stdio.h>

int main(void)
{
    int value = 1;
    {
        int value = 2;
        printf("inner %d\n", value);
        value++;
        printf("inner %d\n", value);
    }
    printf("outer %d\n", value);
    return 0;
}
