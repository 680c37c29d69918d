#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "swanforge/field.hpp"

namespace swanforge {

// ω = Σ A_m dx_m in the p-basis coordinates of F.
struct Form1 {
    std::vector<RatFunc> a;

    static Form1 zero(const FieldConfig& F) {
        return Form1{std::vector<RatFunc>(F.n, RatFunc::zero(F))};
    }
    bool is_zero() const {
        for (auto& c : a)
            if (!c.is_zero()) return false;
        return true;
    }
    Form1 operator+(const Form1& o) const;
    Form1 operator-(const Form1& o) const;
    Form1 scaled(const RatFunc& f) const;
    bool operator==(const Form1&) const = default;
};

// Σ C_{i<j} dx_i ∧ dx_j, entries stored row-major over pairs i < j.
struct Form2 {
    uint32_t n = 0;
    std::vector<RatFunc> c;  // size n(n-1)/2

    static Form2 zero(const FieldConfig& F);
    RatFunc& at(uint32_t i, uint32_t j);        // i < j
    const RatFunc& at(uint32_t i, uint32_t j) const;
    bool is_zero() const {
        for (auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    Form2 operator+(const Form2& o) const;
    Form2 operator-(const Form2& o) const;
};

Form1 d(const RatFunc& f, const FieldConfig& F);
Form2 d(const Form1& w, const FieldConfig& F);
Form1 dlog(const RatFunc& f, const FieldConfig& F);  // df/f, f != 0
Form2 wedge(const Form1& u, const Form1& v, const FieldConfig& F);

bool is_closed(const Form1& w, const FieldConfig& F);

// Cartier data: ω = dh + Σ c_i^p dlog x_i (exact recomposition).
struct ClosedDecomp {
    RatFunc h;
    std::vector<RatFunc> c;
};

// Constructive Cartier decomposition of a closed 1-form, any (p, n):
// the logarithmic coefficients come from the diagonal Frobenius components
// A_{m,(p-1)e_m}, integration happens in Frobenius coordinates, and the
// result is verified by exact recomposition before returning.
ClosedDecomp closed_decompose(const Form1& w, const FieldConfig& F);

// ω = dh?  Criterion: closed with vanishing logarithmic part.
std::optional<RatFunc> is_exact(const Form1& w, const FieldConfig& F);

// Σ {a_i, b_i} in K_2^M(F)/p; entries nonzero.
struct K2Symbol {
    std::vector<std::pair<RatFunc, RatFunc>> terms;
};

// Vanishing via the differential symbol: Σ dlog a ∧ dlog b = 0 in Ω²_F.
// Sound and complete by Bloch-Gabber-Kato injectivity.
bool k2_is_zero(const K2Symbol& sym, const FieldConfig& F);

}  // namespace swanforge
