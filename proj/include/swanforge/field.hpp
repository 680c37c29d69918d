#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swanforge/poly.hpp"

namespace swanforge {

// F = F_p(x_1,...,x_n) with p-basis {x_1,...,x_n}; [F:F^p] = p^n.
struct FieldConfig {
    uint32_t p = 2;
    uint32_t n = 2;
    std::vector<std::string> names{"s", "t"};

    FieldConfig() = default;
    FieldConfig(uint32_t p_, uint32_t n_, std::vector<std::string> names_);

    bool operator==(const FieldConfig&) const = default;
};

// Element of F: reduced fraction of multivariate polynomials.  Normalization
// makes representation canonical, so value equality is operator==.
class RatFunc {
public:
    RatFunc() = default;

    static RatFunc zero(const FieldConfig& F) { return of(Poly::zero(F.p, F.n), F); }
    static RatFunc one(const FieldConfig& F) { return of(Poly::constant(F.p, F.n, 1), F); }
    static RatFunc constant(const FieldConfig& F, long long c) {
        return of(Poly::constant(F.p, F.n, c), F);
    }
    static RatFunc variable(const FieldConfig& F, int i) {
        return of(Poly::variable(F.p, F.n, i), F);
    }
    static RatFunc of(Poly num, const FieldConfig& F);
    static RatFunc fraction(Poly num, Poly den);  // reduces and normalizes

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    uint32_t p() const { return num_.p(); }
    uint32_t nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inv() const;
    RatFunc pow(long long k) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str(const std::vector<std::string>& names) const;

private:
    Poly num_;               // gcd-reduced
    Poly den_{2, 0};         // lex-least monomial has coefficient 1
};

// ∂f/∂x_i via the quotient rule.
RatFunc partial_derivative(const RatFunc& f, int var);

// Frobenius components of f: f = Σ_α f_α^p x^α over α ∈ [0,p)^n.
using FrobDecomp = std::map<Mono, RatFunc>;

FrobDecomp frobenius_decompose(const RatFunc& f, const FieldConfig& F);

// Recomposition Σ f_α^p x^α — test helper for the exactness invariant.
RatFunc frobenius_recompose(const FrobDecomp& d, const FieldConfig& F);

RatFunc frobenius(const RatFunc& f);  // f^p

// g with g^p = f, when f ∈ F^p.
std::optional<RatFunc> pth_root(const RatFunc& f, const FieldConfig& F);

// Decides y^p - y = f over F (p = 2 only): returns a witness y or nothing.
// Factorization-free: reduces to a finite F_2-linear system.
std::optional<RatFunc> artin_schreier_is_trivial(const RatFunc& f, const FieldConfig& F);

}  // namespace swanforge
