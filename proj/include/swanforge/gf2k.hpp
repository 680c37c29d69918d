#pragma once

#include <cstdint>
#include <vector>

namespace swanforge {

// GF(2^13) with log/exp tables.  2^13 - 1 = 8191 is prime, so any modulus
// under which x has full period 8191 is irreducible; the constructor searches
// and verifies.  Used as an evaluation domain for bivariate gcds over F_2.
class GF2k {
public:
    static constexpr int kBits = 13;
    static constexpr uint32_t kOrder = (1u << kBits) - 1;  // 8191

    static const GF2k& instance();

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t s = log_[a] + log_[b];
        if (s >= kOrder) s -= kOrder;
        return exp_[s];
    }
    uint32_t inv(uint32_t a) const { return exp_[(kOrder - log_[a]) % kOrder]; }
    static uint32_t add(uint32_t a, uint32_t b) { return a ^ b; }
    uint32_t generator_pow(uint32_t k) const { return exp_[k % kOrder]; }

private:
    GF2k();
    std::vector<uint32_t> exp_, log_;
};

}  // namespace swanforge
