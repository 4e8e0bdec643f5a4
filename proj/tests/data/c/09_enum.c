#include <stdio.h>

enum color { RED, GREEN, BLUE };

int main(void)
{
    enum color shade = GREEN;
    int code = shade + BLUE;
    switch (shade) {
    case RED:
        printf("red\n");
        break;
    case GREEN:
        printf("green %d\n", code);
        break;
    default:
        printf("other\n");
    }
    return 0;
}
