#include "swanforge/gf2k.hpp"
#include <cstdio>
using namespace swanforge;
int main() {
    printf("building tables...\n"); fflush(stdout);
    const GF2k& K = GF2k::instance();
    printf("done; 3*5=%u inv(7)=%u mul(7,inv(7))=%u\n", K.mul(3,5), K.inv(7), K.mul(7, K.inv(7)));
    return 0;
}
