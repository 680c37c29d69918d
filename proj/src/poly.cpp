#include "swanforge/poly.hpp"

#include <algorithm>
#include <map>

namespace swanforge {

uint32_t fp_inv(uint32_t a, uint32_t p) {
    if (a == 0) throw DivisionByZero("inverse of 0 in F_p");
    // extended Euclid; p is small
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += p;
    return uint32_t(t);
}

Poly Poly::from_terms(uint32_t p, uint32_t nvars, std::vector<Term>&& ts) {
    Poly f(p, nvars);
    f.terms_ = std::move(ts);
    return f;
}

// collapse an unsorted term list into canonical form
Poly normalize_terms(uint32_t p, uint32_t nvars, std::vector<Poly::Term>&& raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Poly::Term& a, const Poly::Term& b) { return a.m < b.m; });
    std::vector<Poly::Term> out;
    out.reserve(raw.size());
    for (auto& t : raw) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = (out.back().c + t.c) % p;
            if (out.back().c == 0) out.pop_back();
        } else {
            uint32_t c = t.c % p;
            if (c) out.push_back({t.m, c});
        }
    }
    return Poly::from_terms(p, nvars, std::move(out));
}

Poly Poly::constant(uint32_t p, uint32_t nvars, long long c) {
    long long r = c % (long long)p;
    if (r < 0) r += p;
    Poly f(p, nvars);
    if (r) f.terms_.push_back({Mono{}, uint32_t(r)});
    return f;
}

Poly Poly::monomial(uint32_t p, uint32_t nvars, Mono m, long long c) {
    long long r = c % (long long)p;
    if (r < 0) r += p;
    Poly f(p, nvars);
    if (r) f.terms_.push_back({m, uint32_t(r)});
    return f;
}

Poly Poly::variable(uint32_t p, uint32_t nvars, int i) {
    return monomial(p, nvars, Mono::var(i), 1);
}

int Poly::degree_in(int var) const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, int(t.m.e[var]));
    return d;  // -1 for the zero polynomial; 0 when var is absent
}

int Poly::total_degree() const {
    int d = -1;
    for (auto& t : terms_) {
        int s = 0;
        for (int i = 0; i < kMaxVars; ++i) s += t.m.e[i];
        d = std::max(d, s);
    }
    return d;
}

uint32_t Poly::coeff(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& mm) { return t.m < mm; });
    if (it != terms_.end() && it->m == m) return it->c;
    return 0;
}

bool Poly::terms_same(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].m < o.terms_[j].m) {
            out.push_back(terms_[i++]);
        } else if (o.terms_[j].m < terms_[i].m) {
            out.push_back(o.terms_[j++]);
        } else {
            uint32_t c = (terms_[i].c + o.terms_[j].c) % p_;
            if (c) out.push_back({terms_[i].m, c});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) out.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    return from_terms(p_, nvars_, std::move(out));
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.c = fp_neg(t.c, p_);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Mono& m, uint32_t c) const {
    c %= p_;
    Poly r(p_, nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m * m, uint32_t(uint64_t(t.c) * c % p_)});
    return r;
}

Poly Poly::mul_scalar(uint32_t c) const { return mul_term(Mono{}, c); }

Poly Poly::operator*(const Poly& o) const {
    std::vector<Term> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_)
            raw.push_back({a.m * b.m, uint32_t(uint64_t(a.c) * b.c % p_)});
    return normalize_terms(p_, nvars_, std::move(raw));
}

Poly Poly::pow(uint32_t k) const {
    Poly r = constant(p_, nvars_, 1);
    Poly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

Poly Poly::exact_div(const Poly& d) const {
    auto q = try_exact_div(d);
    if (!q) throw InternalError("inexact polynomial division");
    return *q;
}

std::optional<Poly> Poly::try_exact_div(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly r = *this;
    std::vector<Term> q;
    uint32_t lcinv = fp_inv(d.leading().c, p_);
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        const Term& ld = d.leading();
        if (!ld.m.divides(lr.m)) return std::nullopt;
        Mono qm = lr.m / ld.m;
        uint32_t qc = uint32_t(uint64_t(lr.c) * lcinv % p_);
        q.push_back({qm, qc});
        r = r - d.mul_term(qm, qc);
    }
    std::sort(q.begin(), q.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    return from_terms(p_, nvars_, std::move(q));
}

Poly Poly::derivative(int var) const {
    std::vector<Term> out;
    for (auto& t : terms_) {
        uint32_t k = t.m.e[var] % p_;
        if (k == 0) continue;
        Term nt = t;
        nt.c = uint32_t(uint64_t(t.c) * k % p_);
        nt.m.e[var] -= 1;
        out.push_back(nt);
    }
    // term order is preserved by lowering one exponent... not in general; re-sort
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    return from_terms(p_, nvars_, std::move(out));
}

Poly Poly::stretch_exponents(const std::vector<char>& flagged, uint16_t k) const {
    std::vector<Term> out = terms_;
    for (auto& t : out)
        for (size_t i = 0; i < flagged.size(); ++i)
            if (flagged[i]) {
                uint32_t s = uint32_t(t.m.e[i]) * k;
                if (s > 0xffff) throw EngineError("monomial exponent overflow");
                t.m.e[i] = uint16_t(s);
            }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    return from_terms(p_, nvars_, std::move(out));
}

Poly Poly::rename_vars(const std::vector<int>& perm, uint32_t new_nvars) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        Mono m;
        for (size_t i = 0; i < perm.size(); ++i) m.e[perm[i]] = t.m.e[i];
        out.push_back({m, t.c});
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    return from_terms(p_, new_nvars, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) throw DivisionByZero("monic of zero");
    return mul_scalar(fp_inv(leading().c, p_));
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::string s;
    for (auto& t : terms_) {
        if (!s.empty()) s += "+";
        bool coef = (t.c != 1) || t.m.is_one();
        if (coef) s += std::to_string(t.c);
        bool first = !coef;
        for (size_t i = 0; i < names.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (!first || coef) s += "*";
            first = false;
            s += names[i];
            if (t.m.e[i] > 1) s += "^" + std::to_string(t.m.e[i]);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// gcd: primitive pseudo-remainder sequences, recursing over the variables.

namespace {

// f as a univariate polynomial in `var` with Poly coefficients (var removed).
std::vector<Poly> uni_view(const Poly& f, int var) {
    int d = f.degree_in(var);
    std::vector<Poly> cs(size_t(d + 1), Poly::zero(f.p(), f.nvars()));
    std::vector<std::vector<Poly::Term>> raw(size_t(d + 1));
    for (auto& t : f.terms()) {
        Poly::Term nt = t;
        int k = nt.m.e[var];
        nt.m.e[var] = 0;
        raw[size_t(k)].push_back(nt);
    }
    for (int k = 0; k <= d; ++k) {
        std::sort(raw[size_t(k)].begin(), raw[size_t(k)].end(),
                  [](const Poly::Term& a, const Poly::Term& b) { return a.m < b.m; });
        cs[size_t(k)] = Poly::from_terms(f.p(), f.nvars(), std::move(raw[size_t(k)]));
    }
    return cs;
}

Poly from_uni_view(const std::vector<Poly>& cs, int var, uint32_t p, uint32_t nvars) {
    std::vector<Poly::Term> raw;
    for (size_t k = 0; k < cs.size(); ++k)
        for (auto& t : cs[k].terms()) {
            Poly::Term nt = t;
            nt.m.e[var] = uint16_t(k);
            raw.push_back(nt);
        }
    return normalize_terms(p, nvars, std::move(raw));
}

int uni_deg(const std::vector<Poly>& u) {
    for (int k = int(u.size()) - 1; k >= 0; --k)
        if (!u[size_t(k)].is_zero()) return k;
    return -1;
}

// pseudo-remainder of u by v in one variable (coefficients are Polys)
std::vector<Poly> pseudo_rem(std::vector<Poly> u, const std::vector<Poly>& v) {
    int dv = uni_deg(v);
    const Poly& lv = v[size_t(dv)];
    int du = uni_deg(u);
    while (du >= dv && du >= 0) {
        Poly lu = u[size_t(du)];
        // u <- lv*u - lu*v*X^(du-dv)
        for (auto& c : u) c = c * lv;
        for (int k = 0; k <= dv; ++k)
            u[size_t(k + du - dv)] = u[size_t(k + du - dv)] - lu * v[size_t(k)];
        u.resize(size_t(du));  // leading term cancelled exactly
        du = uni_deg(u);
    }
    return u;
}

Poly content(const std::vector<Poly>& u) {
    Poly g = Poly::zero(2, 0);
    bool first = true;
    for (auto& c : u) {
        if (c.is_zero()) continue;
        g = first ? c : poly_gcd(g, c);
        first = false;
        if (g.is_one()) break;
    }
    return g;
}

}  // namespace

namespace {

// dense Euclid when both inputs live in a single variable
Poly gcd_univariate(const Poly& a, const Poly& b, int var) {
    uint32_t p = a.p();
    auto densify = [&](const Poly& f) {
        std::vector<uint32_t> c(size_t(f.degree_in(var)) + 1, 0);
        for (auto& t : f.terms()) c[t.m.e[var]] = t.c;
        return c;
    };
    auto deg = [](const std::vector<uint32_t>& c) {
        int d = int(c.size()) - 1;
        while (d >= 0 && c[size_t(d)] == 0) --d;
        return d;
    };
    std::vector<uint32_t> u = densify(a), v = densify(b);
    int du = deg(u), dv = deg(v);
    if (du < dv) {
        std::swap(u, v);
        std::swap(du, dv);
    }
    while (dv >= 0) {
        uint32_t lvinv = fp_inv(v[size_t(dv)], p);
        while (du >= dv) {
            uint32_t s = uint32_t(uint64_t(u[size_t(du)]) * lvinv % p);
            for (int k = 0; k <= dv; ++k) {
                uint64_t sub = uint64_t(s) * v[size_t(k)] % p;
                u[size_t(k + du - dv)] = uint32_t((u[size_t(k + du - dv)] + p - sub) % p);
            }
            du = deg(u);
            if (du < 0) break;
        }
        std::swap(u, v);
        std::swap(du, dv);
    }
    std::vector<Poly::Term> ts;
    for (int k = 0; k <= du; ++k)
        if (u[size_t(k)]) ts.push_back({Mono::var(var, uint16_t(k)), u[size_t(k)]});
    Poly g = Poly::from_terms(p, a.nvars(), std::move(ts));
    return g.is_zero() ? g : g.monic();
}

Poly gcd_prs(const Poly& a, const Poly& b, int var) {
    auto u = uni_view(a, var);
    auto v = uni_view(b, var);
    Poly ca = content(u), cb = content(v);
    for (auto& c : u) c = c.is_zero() ? c : c.exact_div(ca);
    for (auto& c : v) c = c.is_zero() ? c : c.exact_div(cb);
    Poly cg = poly_gcd(ca, cb);

    if (uni_deg(u) < uni_deg(v)) std::swap(u, v);
    while (uni_deg(v) >= 0) {
        auto r = pseudo_rem(u, v);
        if (uni_deg(r) >= 0) {
            Poly cr = content(r);
            for (auto& c : r) c = c.is_zero() ? c : c.exact_div(cr);
        }
        u = std::move(v);
        v = std::move(r);
    }
    Poly g = from_uni_view(u, var, a.p(), a.nvars()) * cg;
    return g.monic();
}

}  // namespace

// Brown-style evaluation/interpolation gcd for bivariate inputs over F_2;
// declared in brown.cpp.
std::optional<Poly> gcd_brown_f2(const Poly& a, const Poly& b, int vx, int vt);

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.p(), a.nvars(), 1);

    std::vector<int> active;
    for (uint32_t i = 0; i < a.nvars(); ++i)
        if (a.degree_in(int(i)) > 0 || b.degree_in(int(i)) > 0) active.push_back(int(i));
    if (active.empty()) return Poly::constant(a.p(), a.nvars(), 1);
    if (active.size() == 1) return gcd_univariate(a, b, active[0]);
    if (active.size() == 2 && a.p() == 2) {
        if (auto g = gcd_brown_f2(a, b, active[0], active[1])) return *g;
    }
    return gcd_prs(a, b, active[0]);
}

bool poly_pth_root(const Poly& f, Poly* root) {
    uint32_t p = f.p();
    std::vector<Poly::Term> out;
    out.reserve(f.terms().size());
    for (auto& t : f.terms()) {
        Poly::Term nt = t;  // coefficients in F_p are their own p-th roots
        for (int i = 0; i < kMaxVars; ++i) {
            if (t.m.e[i] % p != 0) return false;
            nt.m.e[i] = uint16_t(t.m.e[i] / p);
        }
        out.push_back(nt);
    }
    if (root) {
        std::sort(out.begin(), out.end(),
                  [](const Poly::Term& a, const Poly::Term& b) { return a.m < b.m; });
        *root = Poly::from_terms(f.p(), f.nvars(), std::move(out));
    }
    return true;
}

}  // namespace swanforge
