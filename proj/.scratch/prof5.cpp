#include "swanforge/poly.hpp"
#include "swanforge/gf2k.hpp"
#include <cstdio>
using namespace swanforge;
namespace swanforge { std::optional<Poly> gcd_brown_f2(const Poly&, const Poly&, int, int); }
int main() {
    auto V = [](int i){ return Poly::variable(2,2,i); };
    Poly s = V(0), t = V(1);
    Poly g = s + t;
    Poly a = (s*s + t) * g;
    Poly b = (t*t*t + s) * g;
    const GF2k& K = GF2k::instance();
    // manual evaluation check: a(s, gamma) for gamma = generator^1
    uint32_t gamma = K.generator_pow(1);
    printf("gamma=%u\n", gamma);
    // a = s^3 + s^2 t + s t + t^2
    // at t=gamma: s^3 + gamma s^2 + gamma s + gamma^2
    uint32_t g2 = K.mul(gamma, gamma);
    printf("expect coeffs: [%u, %u, %u, 1]\n", g2, gamma, gamma);
    printf("now the full call:\n"); fflush(stdout);
    auto r = gcd_brown_f2(a, b, 0, 1);
    if (r) printf("got %s\n", r->str({"s","t"}).c_str());
    else printf("nullopt\n");
    return 0;
}
