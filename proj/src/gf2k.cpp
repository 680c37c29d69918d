#include "swanforge/gf2k.hpp"

#include "swanforge/errors.hpp"

namespace swanforge {

const GF2k& GF2k::instance() {
    static GF2k g;
    return g;
}

GF2k::GF2k() {
    exp_.assign(kOrder, 0);
    log_.assign(kOrder + 1, 0);
    // search for a modulus giving x full period; period 8191 certifies a field
    for (uint32_t poly = (1u << kBits) | 1; poly < (2u << kBits); poly += 2) {
        uint32_t v = 1;
        uint32_t n = 0;
        bool full = true;
        do {
            exp_[n] = v;
            v <<= 1;
            if (v & (1u << kBits)) v ^= poly;
            ++n;
            if (v == 1 && n < kOrder) {
                full = false;
                break;
            }
        } while (n < kOrder);
        if (full && v == 1) {
            for (uint32_t k = 0; k < kOrder; ++k) log_[exp_[k]] = k;
            return;
        }
    }
    throw InternalError("no primitive GF(2^13) modulus found");
}

}  // namespace swanforge
