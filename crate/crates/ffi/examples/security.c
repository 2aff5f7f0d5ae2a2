#include <stdio.h>
#include "maximin.h"

static const char *GAME =
    "{\"actions_1\":[\"T\",\"B\"],\"actions_2\":[\"L\",\"R\"],"
    "\"payoffs\":[[[\"2\",\"1\"],[\"0\",\"0\"]],[[\"0\",\"0\"],[\"1\",\"2\"]]]}";

int main(void) {
    MaximinGame *game = NULL;
    if (maximin_game_from_json(GAME, &game) != MAXIMIN_STATUS_OK) {
        fprintf(stderr, "%s\n", maximin_last_error());
        return 1;
    }
    for (unsigned p = 1; p <= 2; p++) {
        char *v = NULL;
        if (maximin_security_level(game, p, &v) != MAXIMIN_STATUS_OK) {
            fprintf(stderr, "%s\n", maximin_last_error());
            return 1;
        }
        printf("v%u = %s\n", p, v);
        maximin_string_free(v);
    }
    maximin_game_free(game);
    return 0;
}
