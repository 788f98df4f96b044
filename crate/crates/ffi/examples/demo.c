/* Builds the tail automaton of {ab, ba} and prints it.
 *   cargo build -p syncideal-ffi --release
 *   cc crates/ffi/examples/demo.c -Icrates/ffi/include \
 *      target/release/libsyncideal_ffi.a -lpthread -ldl -lm -o demo
 */
#include <stdio.h>
#include "syncideal.h"

int main(void) {
    SiAcceptor *m = NULL;
    SiSemiautomaton *t = NULL;
    char *text = NULL;
    bool ok = false;
    char *cex = NULL;

    if (si_acceptor_from_words("alphabet a b\nab\nba\n", &m) != SI_STATUS_OK ||
        si_construct_tail(m, &t) != SI_STATUS_OK) {
        fprintf(stderr, "error: %s\n", si_last_error());
        return 2;
    }
    si_semiautomaton_serialize(t, &text);
    fputs(text, stdout);
    si_string_free(text);
    si_verify(t, m, 0, &ok, &cex);
    printf("verified: %s\n", ok ? "yes" : "no");
    si_string_free(cex);
    si_semiautomaton_free(t);
    si_acceptor_free(m);
    return ok ? 0 : 1;
}
