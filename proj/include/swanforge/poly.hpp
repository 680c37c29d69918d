#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swanforge/errors.hpp"

namespace swanforge {

// Exponent vectors are fixed-width so terms stay allocation-free and ordering
// is plain lexicographic array comparison. Unused slots are zero.
inline constexpr int kMaxVars = 8;

struct Mono {
    std::array<uint16_t, kMaxVars> e{};

    friend auto operator<=>(const Mono&, const Mono&) = default;

    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) {
            uint32_t s = uint32_t(e[i]) + o.e[i];
            if (s > 0xffff) throw EngineError("monomial exponent overflow");
            r.e[i] = uint16_t(s);
        }
        return r;
    }
    // Exact division; caller checks divisibility first.
    Mono operator/(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(e[i] - o.e[i]);
        return r;
    }
    bool divides(const Mono& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    static Mono var(int i, uint16_t k = 1) {
        Mono m;
        m.e[i] = k;
        return m;
    }
};

// mod-p scalar helpers (p a small prime)
uint32_t fp_inv(uint32_t a, uint32_t p);
inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

// Multivariate polynomial over F_p; terms sorted lexicographically,
// no zero coefficients stored.  p and nvars ride along for sanity checks.
class Poly {
public:
    struct Term {
        Mono m;
        uint32_t c;  // in [1, p)
    };

    Poly() = default;
    Poly(uint32_t p, uint32_t nvars) : p_(p), nvars_(nvars) {}

    static Poly zero(uint32_t p, uint32_t nvars) { return Poly(p, nvars); }
    static Poly constant(uint32_t p, uint32_t nvars, long long c);
    static Poly monomial(uint32_t p, uint32_t nvars, Mono m, long long c);
    static Poly variable(uint32_t p, uint32_t nvars, int i);

    uint32_t p() const { return p_; }
    uint32_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c == 1; }
    const std::vector<Term>& terms() const { return terms_; }

    // lexicographically largest / smallest monomials
    const Term& leading() const { return terms_.back(); }
    const Term& trailing() const { return terms_.front(); }

    int degree_in(int var) const;
    int total_degree() const;
    uint32_t coeff(const Mono& m) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly mul_term(const Mono& m, uint32_t c) const;
    Poly mul_scalar(uint32_t c) const;
    Poly pow(uint32_t k) const;

    bool operator==(const Poly& o) const { return p_ == o.p_ && terms_same(o); }

    // Exact division: throws InternalError when not divisible.
    Poly exact_div(const Poly& d) const;
    std::optional<Poly> try_exact_div(const Poly& d) const;

    Poly derivative(int var) const;

    // Substitute x_i -> x_i^k for the flagged variables (p-th power images
    // of adjoined roots); used by inseparable extensions.
    Poly stretch_exponents(const std::vector<char>& flagged, uint16_t k) const;

    // Remap variables: exponent of old var i goes to new var perm[i].
    Poly rename_vars(const std::vector<int>& perm, uint32_t new_nvars) const;

    // Scale so the leading coefficient is 1 (poly must be nonzero).
    Poly monic() const;

    std::string str(const std::vector<std::string>& names) const;

    // internal: assumes sorted unique monomials with nonzero coefficients
    static Poly from_terms(uint32_t p, uint32_t nvars, std::vector<Term>&& ts);

private:
    uint32_t p_ = 2;
    uint32_t nvars_ = 0;
    std::vector<Term> terms_;

    bool terms_same(const Poly& o) const;
    friend Poly normalize_terms(uint32_t p, uint32_t nvars, std::vector<Poly::Term>&& raw);
};

Poly poly_gcd(const Poly& a, const Poly& b);

// Square-free-free utilities for Frobenius structure.
// True iff f = g^p for a polynomial g; writes the root when asked.
bool poly_pth_root(const Poly& f, Poly* root);

}  // namespace swanforge
