#include <algorithm>
#include <optional>

#include "swanforge/gf2k.hpp"
#include "swanforge/poly.hpp"

// Evaluation/interpolation gcd for bivariate polynomials over F_2 (Brown's
// algorithm).  Evaluate vt at points of GF(2^13), take univariate gcds in vx,
// interpolate back, and certify the candidate by exact trial division, so the
// usual "unlucky evaluation" analysis is not load-bearing.

namespace swanforge {

namespace {

using Row = std::vector<uint32_t>;  // univariate over GF(2^13), index = degree

int row_deg(const Row& r) {
    int d = int(r.size()) - 1;
    while (d >= 0 && r[size_t(d)] == 0) --d;
    return d;
}

Row gf_gcd(Row u, Row v, const GF2k& K) {
    int du = row_deg(u), dv = row_deg(v);
    if (du < dv) {
        std::swap(u, v);
        std::swap(du, dv);
    }
    while (dv >= 0) {
        uint32_t lvinv = K.inv(v[size_t(dv)]);
        while (du >= dv) {
            uint32_t s = K.mul(u[size_t(du)], lvinv);
            for (int k = 0; k <= dv; ++k)
                u[size_t(k + du - dv)] ^= K.mul(s, v[size_t(k)]);
            du = row_deg(u);
            if (du < 0) break;
        }
        std::swap(u, v);
        std::swap(du, dv);
    }
    // monic
    if (du >= 0) {
        uint32_t li = K.inv(u[size_t(du)]);
        for (auto& c : u) c = K.mul(c, li);
        u.resize(size_t(du) + 1);
    }
    return u;
}

struct Dense {
    // bit j of x_rows[i] (as packed words) = coefficient of vx^i vt^j
    int dx = -1, dt = -1;
    std::vector<std::vector<uint64_t>> rows;
};

Dense densify(const Poly& f, int vx, int vt) {
    Dense d;
    d.dx = f.degree_in(vx);
    d.dt = f.degree_in(vt);
    size_t words = size_t(d.dt) / 64 + 1;
    d.rows.assign(size_t(d.dx) + 1, std::vector<uint64_t>(words, 0));
    for (auto& t : f.terms())
        d.rows[t.m.e[vx]][t.m.e[vt] / 64] |= uint64_t(1) << (t.m.e[vt] % 64);
    return d;
}

uint32_t eval_row(const std::vector<uint64_t>& bits, const std::vector<uint32_t>& pows) {
    uint32_t acc = 0;
    for (size_t w = 0; w < bits.size(); ++w) {
        uint64_t m = bits[w];
        while (m) {
            int b = __builtin_ctzll(m);
            m &= m - 1;
            acc ^= pows[w * 64 + size_t(b)];
        }
    }
    return acc;
}

// coefficient list of f(vt = gamma) as univariate in vx
Row eval_at(const Dense& f, const std::vector<uint32_t>& pows) {
    Row r(size_t(f.dx) + 1, 0);
    for (int i = 0; i <= f.dx; ++i) r[size_t(i)] = eval_row(f.rows[size_t(i)], pows);
    return r;
}

uint32_t eval_poly_univ(const Poly& f, int vt, const std::vector<uint32_t>& pows) {
    uint32_t acc = 0;
    for (auto& t : f.terms()) acc ^= pows[t.m.e[vt]];
    return acc;
}

// Newton interpolation through (xs[i], ys[i]); returns monomial coefficients.
Row interpolate(const std::vector<uint32_t>& xs, const std::vector<uint32_t>& ys,
                const GF2k& K) {
    size_t n = xs.size();
    std::vector<uint32_t> dd = ys;  // divided differences, built in place
    for (size_t lvl = 1; lvl < n; ++lvl)
        for (size_t i = n - 1; i >= lvl; --i) {
            uint32_t den = xs[i] ^ xs[i - lvl];
            dd[i] = K.mul(dd[i] ^ dd[i - 1], K.inv(den));
            if (i == lvl) break;
        }
    Row c;
    for (size_t i = n; i-- > 0;) {
        // c := c*(X - xs[i]) + dd[i]
        Row nc(c.size() + 1, 0);
        for (size_t k = 0; k < c.size(); ++k) {
            nc[k + 1] ^= c[k];
            nc[k] ^= K.mul(c[k], xs[i]);  // -x = x in char 2
        }
        if (nc.empty()) nc.assign(1, 0);
        nc[0] ^= dd[i];
        c = std::move(nc);
        while (c.size() > 1 && c.back() == 0) c.pop_back();
    }
    return c;
}

Poly content_wrt(const Poly& f, int vx, int vt) {
    // gcd of the vx-coefficients (univariate in vt)
    std::vector<Poly> coeffs(size_t(f.degree_in(vx)) + 1, Poly::zero(f.p(), f.nvars()));
    for (auto& t : f.terms()) {
        Poly::Term nt = t;
        nt.m.e[vx] = 0;
        coeffs[t.m.e[vx]] = coeffs[t.m.e[vx]] + Poly::monomial(f.p(), f.nvars(), nt.m, nt.c);
    }
    Poly g = Poly::zero(f.p(), f.nvars());
    for (auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : poly_gcd(g, c);
        if (g.is_one()) break;
    }
    (void)vt;
    return g;
}

}  // namespace

std::optional<Poly> gcd_brown_f2(const Poly& a, const Poly& b, int vx, int vt) {
    const GF2k& K = GF2k::instance();
    uint32_t p = a.p(), nv = a.nvars();

    Poly ca = content_wrt(a, vx, vt), cb = content_wrt(b, vx, vt);
    Poly pa = a.exact_div(ca), pb = b.exact_div(cb);
    Poly cg = poly_gcd(ca, cb);

    if (pa.degree_in(vx) == 0 || pb.degree_in(vx) == 0)
        return cg;  // a primitive polynomial of vx-degree 0 is a unit

    Dense da = densify(pa, vx, vt), db = densify(pb, vx, vt);
    if (da.dt > int(GF2k::kOrder) / 2 || db.dt > int(GF2k::kOrder) / 2) return std::nullopt;

    // leading vx-coefficients and their gcd (all univariate in vt)
    auto lead_coeff = [&](const Poly& f) {
        int dx = f.degree_in(vx);
        Poly lc = Poly::zero(p, nv);
        for (auto& t : f.terms())
            if (t.m.e[vx] == dx) {
                Poly::Term nt = t;
                nt.m.e[vx] = 0;
                lc = lc + Poly::monomial(p, nv, nt.m, nt.c);
            }
        return lc;
    };
    Poly la = lead_coeff(pa), lb = lead_coeff(pb);
    Poly gl = poly_gcd(la, lb);

    int bound = gl.degree_in(vt) + std::min(da.dt, db.dt);
    size_t need = size_t(bound) + 1;

    std::vector<uint32_t> xs, pows(size_t(std::max(da.dt, db.dt) + 1));
    std::vector<Row> samples;
    int best_deg = -2;

    for (uint32_t idx = 0; idx < GF2k::kOrder; ++idx) {
        uint32_t gamma = K.generator_pow(idx);
        pows[0] = 1;
        for (size_t j = 1; j < pows.size(); ++j) pows[j] = K.mul(pows[j - 1], gamma);
        std::vector<uint32_t> lpows(size_t(std::max({la.degree_in(vt), lb.degree_in(vt),
                                                     gl.degree_in(vt)}) + 1));
        lpows[0] = 1;
        for (size_t j = 1; j < lpows.size(); ++j) lpows[j] = K.mul(lpows[j - 1], gamma);
        if (eval_poly_univ(la, vt, lpows) == 0 || eval_poly_univ(lb, vt, lpows) == 0) continue;

        Row g = gf_gcd(eval_at(da, pows), eval_at(db, pows), K);
        int dg = row_deg(g);
        if (dg == 0) return cg;  // coprime primitive parts
        if (best_deg == -2 || dg < best_deg) {
            best_deg = dg;
            xs.clear();
            samples.clear();
        }
        if (dg > best_deg) continue;  // unlucky point
        uint32_t scale = eval_poly_univ(gl, vt, lpows);
        for (auto& c : g) c = K.mul(c, scale);
        xs.push_back(gamma);
        samples.push_back(std::move(g));
        if (xs.size() < need) continue;

        // interpolate h row-by-row; F_2 inputs must come back with 0/1 coords
        std::vector<Poly::Term> terms;
        bool in_f2 = true;
        for (int i = 0; i <= best_deg && in_f2; ++i) {
            std::vector<uint32_t> ys(xs.size());
            for (size_t k = 0; k < xs.size(); ++k)
                ys[k] = i < int(samples[k].size()) ? samples[k][size_t(i)] : 0;
            Row coeffs = interpolate(xs, ys, K);
            for (size_t j = 0; j < coeffs.size(); ++j) {
                uint32_t c = coeffs[j];
                if (c == 0) continue;
                if (c != 1) {
                    in_f2 = false;
                    break;
                }
                Mono m;
                m.e[vx] = uint16_t(i);
                m.e[vt] = uint16_t(j);
                terms.push_back({m, 1});
            }
        }
        if (in_f2 && !terms.empty()) {
            std::sort(terms.begin(), terms.end(),
                      [](const Poly::Term& x, const Poly::Term& y) { return x.m < y.m; });
            Poly h = Poly::from_terms(p, nv, std::move(terms));
            Poly hpp = h.exact_div(content_wrt(h, vx, vt));
            if (pa.try_exact_div(hpp) && pb.try_exact_div(hpp)) return (hpp * cg).monic();
        }
        // certification failed: widen the sample set and keep going
        need += 2;
    }
    return std::nullopt;  // PRS fallback
}

}  // namespace swanforge
