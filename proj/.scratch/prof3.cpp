#include "swanforge/poly.hpp"
#include <cstdio>
using namespace swanforge;
int main() {
    // a = (s+t)*(s^2+t), b = (s+t)*(t^3+s)
    auto V = [](int i){ return Poly::variable(2,2,i); };
    Poly s = V(0), t = V(1);
    Poly g = s + t;
    Poly a = (s*s + t) * g;
    Poly b = (t*t*t + s) * g;
    printf("start\n"); fflush(stdout);
    Poly r = poly_gcd(a, b);
    printf("gcd terms=%zu deg=(%d,%d)\n", r.terms().size(), r.degree_in(0), r.degree_in(1));
    printf("expect s+t: %s\n", r == g.monic() ? "yes" : "no");
    return 0;
}
