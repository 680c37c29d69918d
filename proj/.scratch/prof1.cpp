#include "swanforge/symlen.hpp"
#include "../tests/testutil.hpp"
#include <chrono>
#include <cstdio>
using namespace swanforge;
using testutil::Rng;
int main() {
    FieldConfig F(2, 2, {"s", "t"});
    Rng rng(301);
    auto t0 = std::chrono::steady_clock::now();
    int done = 0;
    while (done < 20) {
        Form1 alpha = rng.form1(F, 6, 4);
        if (is_closed(alpha, F)) continue;
        auto ta = std::chrono::steady_clock::now();
        SymbolDecomp1 dec = decompose_length1(alpha, F);
        bool ok = is_closed(alpha - d(dec.b, F).scaled(dec.a), F);
        auto tb = std::chrono::steady_clock::now();
        printf("case %d: %.3f s ok=%d\n", done,
               std::chrono::duration<double>(tb - ta).count(), int(ok));
        fflush(stdout);
        ++done;
    }
    printf("total %.3f s\n", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}
