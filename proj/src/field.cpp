#include "swanforge/field.hpp"

#include <algorithm>
#include <set>

namespace swanforge {

namespace {
bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}
}  // namespace

FieldConfig::FieldConfig(uint32_t p_, uint32_t n_, std::vector<std::string> names_)
    : p(p_), n(n_), names(std::move(names_)) {
    if (!is_prime(p)) throw EngineError("p must be prime");
    if (n < 1 || n > uint32_t(kMaxVars)) throw Unsupported("variable count out of range");
    if (names.size() != n) throw EngineError("need one name per variable");
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size()) throw EngineError("variable names must be distinct");
}

RatFunc RatFunc::of(Poly num, const FieldConfig& F) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = Poly::constant(F.p, F.n, 1);
    return r;
}

RatFunc RatFunc::fraction(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    RatFunc r;
    if (num.is_zero()) {
        r.num_ = num;
        r.den_ = Poly::constant(num.p(), num.nvars(), 1);
        return r;
    }
    Poly g = poly_gcd(num, den);
    if (!g.is_one()) {
        num = num.exact_div(g);
        den = den.exact_div(g);
    }
    // canonical scale: lex-least denominator monomial gets coefficient 1
    uint32_t c = den.trailing().c;
    if (c != 1) {
        uint32_t ci = fp_inv(c, den.p());
        num = num.mul_scalar(ci);
        den = den.mul_scalar(ci);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    // lcm of the denominators keeps the final reducing gcd small
    Poly g = poly_gcd(den_, o.den_);
    if (g.is_one()) return fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly d1 = den_.exact_div(g), d2 = o.den_.exact_div(g);
    return fraction(num_ * d2 + o.num_ * d1, den_ * d2);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    // cross-cancel before multiplying to keep degrees down
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n1 = g1.is_one() || num_.is_zero() ? num_ : num_.exact_div(g1);
    Poly d2 = g1.is_one() ? o.den_ : o.den_.exact_div(g1);
    Poly n2 = g2.is_one() || o.num_.is_zero() ? o.num_ : o.num_.exact_div(g2);
    Poly d1 = g2.is_one() ? den_ : den_.exact_div(g2);
    return fraction(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of 0 in F");
    return fraction(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::pow(long long k) const {
    if (k < 0) return inv().pow(-k);
    RatFunc r;
    r.num_ = num_.pow(uint32_t(k));
    r.den_ = den_.pow(uint32_t(k));
    return fraction(r.num_, r.den_);
}

std::string RatFunc::str(const std::vector<std::string>& names) const {
    if (den_.is_one()) return num_.str(names);
    std::string s = "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
    return s;
}

RatFunc partial_derivative(const RatFunc& f, int var) {
    // (g/h)' = (g'h - g h')/h^2
    Poly gp = f.num().derivative(var);
    Poly hp = f.den().derivative(var);
    return RatFunc::fraction(gp * f.den() - f.num() * hp, f.den() * f.den());
}

FrobDecomp frobenius_decompose(const RatFunc& f, const FieldConfig& F) {
    FrobDecomp out;
    if (f.is_zero()) return out;
    uint32_t p = F.p;
    // f = g/h = (g h^{p-1}) / h^p; split G = g h^{p-1} by exponent residues.
    Poly G = f.num() * f.den().pow(p - 1);
    std::map<Mono, std::vector<Poly::Term>> buckets;
    for (auto& t : G.terms()) {
        Mono alpha, rest;
        for (int i = 0; i < kMaxVars; ++i) {
            alpha.e[i] = uint16_t(t.m.e[i] % p);
            rest.e[i] = uint16_t(t.m.e[i] / p);
        }
        // coefficients of F_p are their own p-th roots
        buckets[alpha].push_back({rest, t.c});
    }
    for (auto& [alpha, raw] : buckets) {
        std::sort(raw.begin(), raw.end(),
                  [](const Poly::Term& a, const Poly::Term& b) { return a.m < b.m; });
        Poly r = Poly::from_terms(F.p, F.n, std::move(raw));
        RatFunc comp = RatFunc::fraction(r, f.den());
        if (!comp.is_zero()) out.emplace(alpha, std::move(comp));
    }
    return out;
}

RatFunc frobenius_recompose(const FrobDecomp& d, const FieldConfig& F) {
    RatFunc acc = RatFunc::zero(F);
    for (auto& [alpha, comp] : d) {
        RatFunc mono = RatFunc::of(Poly::monomial(F.p, F.n, alpha, 1), F);
        acc = acc + comp.pow(F.p) * mono;
    }
    return acc;
}

RatFunc frobenius(const RatFunc& f) { return f.pow(f.p()); }

std::optional<RatFunc> pth_root(const RatFunc& f, const FieldConfig& F) {
    if (f.is_zero()) return RatFunc::zero(F);
    FrobDecomp d = frobenius_decompose(f, F);
    if (d.size() != 1) return std::nullopt;
    auto& [alpha, comp] = *d.begin();
    if (!alpha.is_one()) return std::nullopt;
    return comp;
}

// ---------------------------------------------------------------------------
// Artin-Schreier over F_2(x_1,...,x_n).
//
// y = u/w in lowest terms and y^2 + y = g/h reduced forces h = w^2 and
// u^2 + u w = g (char 2 keeps u^2 + uw coprime to w).  u |-> u^2 + u w is
// F_2-linear in the coefficients of u, with deg_i u <= max(deg_i w,
// ceil(deg_i g / 2)), so a finite linear system decides solvability.

namespace {

struct F2Solver {
    // columns: candidate monomials of u; rows: monomials of the image space
    std::map<Mono, int> row_of;
    std::vector<Mono> col_mono;
    std::vector<std::vector<uint64_t>> cols;  // bitset per column
    size_t nrows = 0;

    int row(const Mono& m) {
        auto it = row_of.find(m);
        if (it != row_of.end()) return it->second;
        int r = int(nrows++);
        row_of.emplace(m, r);
        return r;
    }
};

}  // namespace

std::optional<RatFunc> artin_schreier_is_trivial(const RatFunc& f, const FieldConfig& F) {
    if (F.p != 2) throw Unsupported("Artin-Schreier solver requires p = 2");
    if (f.is_zero()) return RatFunc::zero(F);

    Poly g = f.num(), h = f.den();
    Poly w = Poly::zero(F.p, F.n);
    if (!poly_pth_root(h, &w)) return std::nullopt;  // h must be a square

    // degree bounds per variable
    std::vector<int> bound(F.n, 0);
    for (uint32_t i = 0; i < F.n; ++i) {
        int dw = std::max(w.degree_in(int(i)), 0);
        int dg = std::max(g.degree_in(int(i)), 0);
        bound[i] = std::max(dw, (dg + 1) / 2);
    }

    // enumerate candidate monomials for u
    std::vector<Mono> candidates;
    Mono cur;
    for (;;) {
        candidates.push_back(cur);
        int i = 0;
        for (; i < int(F.n); ++i) {
            if (int(cur.e[i]) < bound[size_t(i)]) {
                cur.e[i]++;
                break;
            }
            cur.e[i] = 0;
        }
        if (i == int(F.n)) break;
    }

    F2Solver S;
    // image of each candidate monomial mu: mu^2 + mu*w
    std::vector<std::vector<int>> col_rows;
    col_rows.reserve(candidates.size());
    for (auto& mu : candidates) {
        Poly img = Poly::monomial(F.p, F.n, mu, 1).pow(2) +
                   w.mul_term(mu, 1);
        std::vector<int> rows;
        for (auto& t : img.terms()) rows.push_back(S.row(t.m));
        col_rows.push_back(std::move(rows));
    }
    std::vector<int> target_rows;
    for (auto& t : g.terms()) target_rows.push_back(S.row(t.m));

    size_t words = (S.nrows + 63) / 64;
    size_t ncols = candidates.size();
    // augmented matrix, rows = monomials, columns = candidates + rhs
    std::vector<std::vector<uint64_t>> M(S.nrows, std::vector<uint64_t>((ncols + 1 + 63) / 64, 0));
    (void)words;
    auto set_bit = [&](size_t r, size_t c) { M[r][c / 64] ^= (uint64_t(1) << (c % 64)); };
    for (size_t c = 0; c < ncols; ++c)
        for (int r : col_rows[c]) set_bit(size_t(r), c);
    for (int r : target_rows) set_bit(size_t(r), ncols);

    // Gaussian elimination over F_2
    std::vector<int> pivot_col_of_row(S.nrows, -1);
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < S.nrows; ++c) {
        size_t pr = rank;
        while (pr < S.nrows && !((M[pr][c / 64] >> (c % 64)) & 1)) ++pr;
        if (pr == S.nrows) continue;
        std::swap(M[rank], M[pr]);
        for (size_t r = 0; r < S.nrows; ++r) {
            if (r != rank && ((M[r][c / 64] >> (c % 64)) & 1))
                for (size_t wd = 0; wd < M[r].size(); ++wd) M[r][wd] ^= M[rank][wd];
        }
        pivot_col_of_row[rank] = int(c);
        ++rank;
    }
    // consistency: no row with 0 = 1
    for (size_t r = rank; r < S.nrows; ++r)
        if ((M[r][ncols / 64] >> (ncols % 64)) & 1) return std::nullopt;

    std::vector<Poly::Term> uterms;
    for (size_t r = 0; r < rank; ++r) {
        if (((M[r][ncols / 64] >> (ncols % 64)) & 1) && pivot_col_of_row[r] >= 0)
            uterms.push_back({candidates[size_t(pivot_col_of_row[r])], 1});
    }
    std::sort(uterms.begin(), uterms.end(),
              [](const Poly::Term& a, const Poly::Term& b) { return a.m < b.m; });
    Poly u = Poly::from_terms(F.p, F.n, std::move(uterms));

    // guard: the derivation of the system is checked by recomposition
    RatFunc y = RatFunc::fraction(u, w);
    if (!(y * y + y == f)) throw InternalError("Artin-Schreier witness failed recomposition");
    return y;
}

}  // namespace swanforge
