#pragma once

#include "swanforge/forms.hpp"

namespace swanforge {

// Length-0 (input closed) or length-1 data: input - a db is closed.
struct SymbolDecomp1 {
    int length = 0;  // 0 or 1
    RatFunc a, b;
};

// Writes a non-closed α ∈ Ω¹_F as a db modulo closed forms (p = 2, n = 2),
// branching on the Frobenius components of α = f dlog x_1 + g dlog x_2.
// The returned pair is always re-checked: d(α - a db) = 0.
SymbolDecomp1 decompose_length1(const Form1& alpha, const FieldConfig& F);

// E = F[u_1..u_{n-1}]/(u_i^p - x_i), modelled as a rational function field in
// fresh root variables; the embedding scales exponents of the replaced vars.
struct InsepExtension {
    FieldConfig base;
    FieldConfig ext;
    std::vector<char> adjoined;  // per base variable
    long long degree = 1;        // p^(#adjoined)

    RatFunc embed(const RatFunc& f) const;
    Form1 embed_form(const Form1& w) const;  // dx_i = d(u_i^p) = 0 for adjoined i
};

InsepExtension make_insep_extension(const FieldConfig& F, const std::vector<char>& adjoin);

// Prop.-style splitting: adjoin p-th roots of x_1..x_{n-1}; the pulled-back
// form must land in Z¹_E.  Returns the extension and the verification bit.
std::pair<InsepExtension, bool> split_by_insep(const Form1& alpha, const FieldConfig& F);

// sym - {a, b} vanishes under the differential symbol?
bool k2_verify_length1(const K2Symbol& sym, const RatFunc& a, const RatFunc& b,
                       const FieldConfig& F);

}  // namespace swanforge
