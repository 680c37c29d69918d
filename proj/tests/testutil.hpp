#pragma once

#include <random>

#include "swanforge/field.hpp"
#include "swanforge/forms.hpp"

namespace swanforge::testutil {

// Deterministic generators shared across suites.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}

    uint32_t below(uint32_t n) { return uint32_t(eng() % n); }

    Poly poly(const FieldConfig& F, int max_deg, int max_terms, bool nonzero = false) {
        std::vector<Poly::Term> raw;
        int nterms = 1 + int(below(uint32_t(max_terms)));
        for (int k = 0; k < nterms; ++k) {
            Mono m;
            for (uint32_t i = 0; i < F.n; ++i) m.e[i] = uint16_t(below(uint32_t(max_deg + 1)));
            uint32_t c = 1 + below(F.p - 1);
            raw.push_back({m, c});
        }
        Poly f = Poly::zero(F.p, F.n);
        for (auto& t : raw) f = f + Poly::monomial(F.p, F.n, t.m, t.c);
        if (nonzero && f.is_zero()) return Poly::constant(F.p, F.n, 1);
        return f;
    }

    RatFunc ratfunc(const FieldConfig& F, int max_deg = 3, int max_terms = 3) {
        Poly num = poly(F, max_deg, max_terms);
        Poly den = poly(F, max_deg, max_terms, true);
        return RatFunc::fraction(num, den);
    }

    RatFunc nonzero_ratfunc(const FieldConfig& F, int max_deg = 3, int max_terms = 3) {
        for (;;) {
            RatFunc f = ratfunc(F, max_deg, max_terms);
            if (!f.is_zero()) return f;
        }
    }

    Form1 form1(const FieldConfig& F, int max_deg = 3, int max_terms = 3) {
        Form1 w = Form1::zero(F);
        for (auto& c : w.a) c = ratfunc(F, max_deg, max_terms);
        return w;
    }
};

}  // namespace swanforge::testutil
