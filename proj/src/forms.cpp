#include "swanforge/forms.hpp"

namespace swanforge {

Form1 Form1::operator+(const Form1& o) const {
    Form1 r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] + o.a[i];
    return r;
}

Form1 Form1::operator-(const Form1& o) const {
    Form1 r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] - o.a[i];
    return r;
}

Form1 Form1::scaled(const RatFunc& f) const {
    Form1 r = *this;
    for (auto& x : r.a) x = x * f;
    return r;
}

Form2 Form2::zero(const FieldConfig& F) {
    Form2 w;
    w.n = F.n;
    w.c.assign(size_t(F.n) * (F.n - 1) / 2, RatFunc::zero(F));
    return w;
}

RatFunc& Form2::at(uint32_t i, uint32_t j) {
    // pairs (i, j), i < j, ordered lexicographically
    size_t idx = 0;
    for (uint32_t k = 0; k < i; ++k) idx += n - 1 - k;
    return c[idx + (j - i - 1)];
}

const RatFunc& Form2::at(uint32_t i, uint32_t j) const {
    return const_cast<Form2*>(this)->at(i, j);
}

Form2 Form2::operator+(const Form2& o) const {
    Form2 r = *this;
    for (size_t k = 0; k < c.size(); ++k) r.c[k] = r.c[k] + o.c[k];
    return r;
}

Form2 Form2::operator-(const Form2& o) const {
    Form2 r = *this;
    for (size_t k = 0; k < c.size(); ++k) r.c[k] = r.c[k] - o.c[k];
    return r;
}

Form1 d(const RatFunc& f, const FieldConfig& F) {
    Form1 w = Form1::zero(F);
    for (uint32_t i = 0; i < F.n; ++i) w.a[i] = partial_derivative(f, int(i));
    return w;
}

Form2 d(const Form1& w, const FieldConfig& F) {
    Form2 r = Form2::zero(F);
    for (uint32_t i = 0; i < F.n; ++i)
        for (uint32_t j = i + 1; j < F.n; ++j)
            r.at(i, j) = partial_derivative(w.a[j], int(i)) - partial_derivative(w.a[i], int(j));
    return r;
}

Form1 dlog(const RatFunc& f, const FieldConfig& F) {
    if (f.is_zero()) throw DivisionByZero("dlog of 0");
    Form1 w = d(f, F);
    RatFunc fi = f.inv();
    for (auto& x : w.a) x = x * fi;
    return w;
}

Form2 wedge(const Form1& u, const Form1& v, const FieldConfig& F) {
    Form2 r = Form2::zero(F);
    for (uint32_t i = 0; i < F.n; ++i)
        for (uint32_t j = i + 1; j < F.n; ++j)
            r.at(i, j) = u.a[i] * v.a[j] - u.a[j] * v.a[i];
    return r;
}

bool is_closed(const Form1& w, const FieldConfig& F) { return d(w, F).is_zero(); }

namespace {

RatFunc frob_component(const FrobDecomp& dec, const Mono& alpha, const FieldConfig& F) {
    auto it = dec.find(alpha);
    return it == dec.end() ? RatFunc::zero(F) : it->second;
}

}  // namespace

ClosedDecomp closed_decompose(const Form1& w, const FieldConfig& F) {
    if (!is_closed(w, F)) throw NotClosed();
    uint32_t p = F.p;

    std::vector<FrobDecomp> dec(F.n);
    for (uint32_t m = 0; m < F.n; ++m) dec[m] = frobenius_decompose(w.a[m], F);

    ClosedDecomp out;
    out.h = RatFunc::zero(F);
    out.c.assign(F.n, RatFunc::zero(F));

    // Logarithmic part: the diagonal components A_{m,(p-1)e_m} give the
    // Cartier image, so c_m := A_{m,(p-1)e_m} x_m.
    for (uint32_t m = 0; m < F.n; ++m) {
        RatFunc diag = frob_component(dec[m], Mono::var(int(m), uint16_t(p - 1)), F);
        out.c[m] = diag * RatFunc::variable(F, int(m));
    }

    // η := ω - Σ c_m^p dlog x_m is exact; integrate it in Frobenius coords:
    // η_{m,α} = (α_m + 1)·h_{α+e_m} with η_{m,α} = 0 whenever α_m = p-1.
    std::vector<FrobDecomp> eta(F.n);
    for (uint32_t m = 0; m < F.n; ++m) {
        RatFunc em = w.a[m] - out.c[m].pow(p) / RatFunc::variable(F, int(m));
        eta[m] = frobenius_decompose(em, F);
    }

    RatFunc h = RatFunc::zero(F);
    // enumerate γ ∈ [0,p)^n, γ ≠ 0
    Mono gamma;
    auto advance = [&]() {
        for (uint32_t i = 0; i < F.n; ++i) {
            if (gamma.e[i] + 1u < p) {
                gamma.e[i]++;
                return true;
            }
            gamma.e[i] = 0;
        }
        return false;
    };
    while (advance()) {
        uint32_t m = 0;
        while (gamma.e[m] == 0) ++m;
        Mono alpha = gamma;
        alpha.e[m] -= 1;
        RatFunc comp = frob_component(eta[m], alpha, F);
        RatFunc hg = comp / RatFunc::constant(F, int64_t(gamma.e[m]));
        if (!hg.is_zero())
            h = h + hg.pow(p) * RatFunc::of(Poly::monomial(F.p, F.n, gamma, 1), F);
    }
    out.h = h;

    // The recomposition identity is the contract; fail loudly otherwise.
    Form1 rec = d(out.h, F);
    for (uint32_t m = 0; m < F.n; ++m)
        rec.a[m] = rec.a[m] + out.c[m].pow(p) / RatFunc::variable(F, int(m));
    if (!(rec == w)) throw InternalError("Cartier decomposition failed recomposition");
    return out;
}

std::optional<RatFunc> is_exact(const Form1& w, const FieldConfig& F) {
    if (!is_closed(w, F)) return std::nullopt;
    ClosedDecomp dec = closed_decompose(w, F);
    for (auto& cm : dec.c)
        if (!cm.is_zero()) return std::nullopt;
    return dec.h;
}

bool k2_is_zero(const K2Symbol& sym, const FieldConfig& F) {
    Form2 acc = Form2::zero(F);
    for (auto& [a, b] : sym.terms) {
        if (a.is_zero() || b.is_zero()) throw ZeroEntry();
        acc = acc + wedge(dlog(a, F), dlog(b, F), F);
    }
    return acc.is_zero();
}

}  // namespace swanforge
