#include <stdio.h>

int main(void)
{
    char ch = 'a';
    char quote = '\'';
    const char *text = "tab\there \"quoted\" ch";
    int letters = 0;
    for (const char *cursor = text; *cursor; cursor++) {
        if (*cursor >= 'a' && *cursor <= 'z')
            letters++;
    }
    printf("%c %c %d\n", ch, quote, letters);
    return 0;
}
