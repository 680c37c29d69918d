#pragma once

#include <map>

#include "swanforge/field.hpp"

namespace swanforge {

// Element of K = F((π)) with finitely many stored coefficients.  An exact
// element is known everywhere; an inexact one is known only up to index cap
// (unknown above).  Every inexact inverse clears the exactness flag, and
// reading past the cap raises PrecisionExhausted rather than truncating
// silently.
class LaurentElt {
public:
    static constexpr int kDefaultCap = 24;

    LaurentElt() = default;
    static LaurentElt zero(const FieldConfig& F, int cap = kDefaultCap);
    static LaurentElt from(const RatFunc& c, int power, const FieldConfig& F,
                           int cap = kDefaultCap);
    static LaurentElt one(const FieldConfig& F, int cap = kDefaultCap) {
        return from(RatFunc::one(F), 0, F, cap);
    }
    static LaurentElt pi(const FieldConfig& F, int cap = kDefaultCap) {
        return from(RatFunc::one(F), 1, F, cap);
    }

    bool exact() const { return exact_; }
    int cap() const { return cap_; }
    uint32_t p() const { return p_; }
    const std::map<int, RatFunc>& coeffs() const { return c_; }

    bool known_zero() const { return c_.empty() && exact_; }
    // zero as far as tracked (exact zero, or no known coefficients)
    bool zero_up_to_cap() const { return c_.empty(); }

    // least index with nonzero coefficient; throws on (possibly) zero input
    int valuation() const;

    RatFunc coeff(int k) const;        // PrecisionExhausted above an inexact cap
    RatFunc coeff_or_zero(int k) const;  // no precision check (graded reads <= 0)

    LaurentElt operator+(const LaurentElt& o) const;
    LaurentElt operator-(const LaurentElt& o) const;
    LaurentElt operator-() const;
    LaurentElt operator*(const LaurentElt& o) const;
    LaurentElt scaled(const RatFunc& f) const;
    LaurentElt shifted(int k) const;  // multiply by π^k
    // truncated inverse: exact only for monomials
    LaurentElt inv(int out_cap = -1) const;

    LaurentElt frobenius() const;                    // Σ c_k^p π^{pk}
    LaurentElt derivative_var(int var) const;        // coefficient-wise ∂/∂x_i
    LaurentElt pi_scaled_derivative() const;         // π·d/dπ = Σ (k mod p)·c_k π^k

    LaurentElt truncated(int cap) const;             // drops info, clears exactness
    LaurentElt exact_part_below(int cutoff) const;   // exact element from indices < cutoff

    // equality of what is known on both sides (up to min cap for inexact)
    bool agrees_with(const LaurentElt& o) const;
    bool operator==(const LaurentElt& o) const {
        return exact_ && o.exact_ && c_ == o.c_;
    }

    std::string str(const std::vector<std::string>& names) const;

private:
    std::map<int, RatFunc> c_;  // no zero coefficients stored
    int cap_ = kDefaultCap;
    bool exact_ = true;
    uint32_t p_ = 2, nvars_ = 0;

    RatFunc zero_rf() const {
        return RatFunc::fraction(Poly::zero(p_, nvars_), Poly::constant(p_, nvars_, 1));
    }
    void prune();
};

}  // namespace swanforge
