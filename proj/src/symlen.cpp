#include "swanforge/symlen.hpp"

namespace swanforge {

SymbolDecomp1 decompose_length1(const Form1& alpha, const FieldConfig& F) {
    if (F.p != 2 || F.n != 2) throw Unsupported("length-1 decomposition requires p = 2, n = 2");
    if (is_closed(alpha, F)) return SymbolDecomp1{};

    RatFunc s = RatFunc::variable(F, 0), t = RatFunc::variable(F, 1);
    // α = f dlog s + g dlog t
    RatFunc f = alpha.a[0] * s;
    RatFunc g = alpha.a[1] * t;
    FrobDecomp fd = frobenius_decompose(f, F);
    FrobDecomp gd = frobenius_decompose(g, F);
    auto comp = [&](const FrobDecomp& d, uint16_t i, uint16_t j) {
        Mono m;
        m.e[0] = i;
        m.e[1] = j;
        auto it = d.find(m);
        return it == d.end() ? RatFunc::zero(F) : it->second;
    };
    RatFunc f01 = comp(fd, 0, 1), f11 = comp(fd, 1, 1);
    RatFunc g10 = comp(gd, 1, 0), g11 = comp(gd, 1, 1);

    SymbolDecomp1 out;
    out.length = 1;
    RatFunc wild = f11 * f11 + g11 * g11;  // (f11 + g11)^2
    if (!f01.is_zero()) {
        out.a = f01 * f01 / s + g10 * g10 / t;
        out.b = s * s * wild / (f01 * f01) * t + s * t;
    } else if (!g10.is_zero()) {
        // roles of (s, f) and (t, g) swapped
        out.a = g10 * g10 / t;
        out.b = t * t * wild / (g10 * g10) * s + t * s;
    } else {
        // f01 = g10 = 0 and α not closed force f11 + g11 != 0:
        // α ≡ (f11²+g11²) st dlog s, realized exactly by a db below.
        out.a = wild * t;
        out.b = s;
    }

    Form1 residue = alpha - d(out.b, F).scaled(out.a);
    if (!is_closed(residue, F)) throw InternalError("length-1 decomposition not closed");
    return out;
}

RatFunc InsepExtension::embed(const RatFunc& f) const {
    Poly n = f.num().stretch_exponents(adjoined, uint16_t(base.p));
    Poly d = f.den().stretch_exponents(adjoined, uint16_t(base.p));
    return RatFunc::fraction(n, d);
}

Form1 InsepExtension::embed_form(const Form1& w) const {
    Form1 r = Form1::zero(ext);
    for (uint32_t m = 0; m < base.n; ++m) {
        if (adjoined[m]) continue;  // dx_m = d(u_m^p) = 0 over E
        r.a[m] = embed(w.a[m]);
    }
    return r;
}

InsepExtension make_insep_extension(const FieldConfig& F, const std::vector<char>& adjoin) {
    InsepExtension E;
    E.base = F;
    E.adjoined = adjoin;
    std::vector<std::string> names = F.names;
    for (uint32_t i = 0; i < F.n; ++i)
        if (adjoin[i]) {
            names[i] = "r" + names[i];  // u with u^p = x
            E.degree *= F.p;
        }
    E.ext = FieldConfig(F.p, F.n, names);
    return E;
}

std::pair<InsepExtension, bool> split_by_insep(const Form1& alpha, const FieldConfig& F) {
    std::vector<char> adjoin(F.n, 1);
    adjoin[F.n - 1] = 0;
    InsepExtension E = make_insep_extension(F, adjoin);
    Form1 pulled = E.embed_form(alpha);
    return {E, is_closed(pulled, E.ext)};
}

bool k2_verify_length1(const K2Symbol& sym, const RatFunc& a, const RatFunc& b,
                       const FieldConfig& F) {
    if (a.is_zero() || b.is_zero()) throw ZeroEntry();
    Form2 acc = Form2::zero(F);
    for (auto& [x, y] : sym.terms) {
        if (x.is_zero() || y.is_zero()) throw ZeroEntry();
        acc = acc + wedge(dlog(x, F), dlog(y, F), F);
    }
    acc = acc - wedge(dlog(a, F), dlog(b, F), F);
    return acc.is_zero();
}

}  // namespace swanforge
