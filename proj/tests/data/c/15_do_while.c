#include <stdio.h>

int main(void)
{
    int countdown = 5;
    int product = 1;
    do {
        product *= countdown;
        countdown--;
    } while (countdown > 0);
    printf("5! = %d\n", product);
    return 0;
}
