#include "swanforge/laurent.hpp"

#include <algorithm>
#include <limits>

namespace swanforge {

LaurentElt LaurentElt::zero(const FieldConfig& F, int cap) {
    LaurentElt x;
    x.cap_ = cap;
    x.p_ = F.p;
    x.nvars_ = F.n;
    return x;
}

LaurentElt LaurentElt::from(const RatFunc& c, int power, const FieldConfig& F, int cap) {
    LaurentElt x = zero(F, cap);
    if (!c.is_zero()) x.c_[power] = c;
    return x;
}

void LaurentElt::prune() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.is_zero())
            it = c_.erase(it);
        else
            ++it;
    }
    if (!exact_)
        for (auto it = c_.upper_bound(cap_); it != c_.end();) it = c_.erase(it);
}

int LaurentElt::valuation() const {
    if (c_.empty()) {
        if (exact_) throw DivisionByZero("valuation of 0");
        throw PrecisionExhausted("valuation unknown below precision cap");
    }
    return c_.begin()->first;
}

RatFunc LaurentElt::coeff(int k) const {
    if (!exact_ && k > cap_) throw PrecisionExhausted();
    return coeff_or_zero(k);
}

RatFunc LaurentElt::coeff_or_zero(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? zero_rf() : it->second;
}

LaurentElt LaurentElt::operator+(const LaurentElt& o) const {
    LaurentElt r = *this;
    r.exact_ = exact_ && o.exact_;
    r.cap_ = r.exact_ ? std::min(cap_, o.cap_)
                      : std::min(exact_ ? o.cap_ : cap_, o.exact_ ? cap_ : o.cap_);
    for (auto& [k, v] : o.c_) {
        RatFunc s = r.coeff_or_zero(k) + v;
        if (s.is_zero())
            r.c_.erase(k);
        else
            r.c_[k] = s;
    }
    r.prune();
    return r;
}

LaurentElt LaurentElt::operator-() const {
    LaurentElt r = *this;
    for (auto& [k, v] : r.c_) v = -v;
    return r;
}

LaurentElt LaurentElt::operator-(const LaurentElt& o) const { return *this + (-o); }

LaurentElt LaurentElt::operator*(const LaurentElt& o) const {
    LaurentElt r;
    r.p_ = p_;
    r.nvars_ = nvars_;
    r.exact_ = exact_ && o.exact_;
    auto low = [](const LaurentElt& x) { return x.c_.empty() ? x.cap_ + 1 : x.c_.begin()->first; };
    if (r.exact_) {
        r.cap_ = std::min(cap_, o.cap_);
    } else {
        int cap = std::numeric_limits<int>::max();
        if (!exact_) cap = std::min(cap, cap_ + low(o));
        if (!o.exact_) cap = std::min(cap, o.cap_ + low(*this));
        r.cap_ = cap;
    }
    for (auto& [i, a] : c_)
        for (auto& [j, b] : o.c_) {
            if (!r.exact_ && i + j > r.cap_) continue;
            RatFunc s = r.coeff_or_zero(i + j) + a * b;
            if (s.is_zero())
                r.c_.erase(i + j);
            else
                r.c_[i + j] = s;
        }
    r.prune();
    return r;
}

LaurentElt LaurentElt::scaled(const RatFunc& f) const {
    LaurentElt r = *this;
    if (f.is_zero()) {
        r.c_.clear();
        return r;
    }
    for (auto& [k, v] : r.c_) v = v * f;
    r.prune();
    return r;
}

LaurentElt LaurentElt::shifted(int k) const {
    LaurentElt r;
    r.p_ = p_;
    r.nvars_ = nvars_;
    r.exact_ = exact_;
    r.cap_ = cap_ + k;
    for (auto& [i, v] : c_) r.c_[i + k] = v;
    return r;
}

LaurentElt LaurentElt::inv(int out_cap) const {
    if (c_.empty()) {
        if (exact_) throw DivisionByZero("inverse of 0 in K");
        throw PrecisionExhausted("inverse of element with no known coefficients");
    }
    int v = c_.begin()->first;
    RatFunc lead = c_.begin()->second;
    if (c_.size() == 1 && exact_) {  // monomial inverts exactly
        LaurentElt r;
        r.p_ = p_;
        r.nvars_ = nvars_;
        r.cap_ = cap_;
        r.c_[-v] = lead.inv();
        return r;
    }
    if (out_cap < 0) out_cap = std::max(cap_, 0);
    // this = lead π^v (1 + m) with v(m) >= 1; invert the unit by the
    // geometric series truncated at out_cap, then shift and scale back.
    LaurentElt m = shifted(-v).scaled(lead.inv());
    m.c_.erase(0);
    LaurentElt one;
    one.p_ = p_;
    one.nvars_ = nvars_;
    one.cap_ = out_cap;
    one.exact_ = false;
    one.c_[0] = RatFunc::fraction(Poly::constant(p_, nvars_, 1), Poly::constant(p_, nvars_, 1));
    LaurentElt acc = one, pw = one;
    LaurentElt neg_m = -m;
    int mval = neg_m.c_.empty() ? out_cap + 1 : neg_m.c_.begin()->first;
    if (mval < 1) throw InternalError("unit part has nonpositive valuation");
    for (int k = 1; int64_t(k) * mval <= out_cap; ++k) {
        pw = (pw * neg_m).truncated(out_cap);
        acc = acc + pw;
    }
    LaurentElt r = acc.shifted(-v).scaled(lead.inv());
    r.exact_ = false;
    return r;
}

LaurentElt LaurentElt::frobenius() const {
    LaurentElt r;
    r.p_ = p_;
    r.nvars_ = nvars_;
    r.exact_ = exact_;
    r.cap_ = exact_ ? cap_ : cap_ * int(p_);
    for (auto& [k, v] : c_) {
        RatFunc f = v.pow(p_);
        if (!f.is_zero()) r.c_[k * int(p_)] = f;
    }
    return r;
}

LaurentElt LaurentElt::derivative_var(int var) const {
    LaurentElt r = *this;
    for (auto& [k, v] : r.c_) v = partial_derivative(v, var);
    r.prune();
    return r;
}

LaurentElt LaurentElt::pi_scaled_derivative() const {
    LaurentElt r = *this;
    for (auto& [k, v] : r.c_) {
        long long kk = ((k % int(p_)) + int(p_)) % int(p_);
        v = v * RatFunc::fraction(Poly::constant(p_, nvars_, kk), Poly::constant(p_, nvars_, 1));
    }
    r.prune();
    return r;
}

LaurentElt LaurentElt::truncated(int cap) const {
    LaurentElt r = *this;
    r.cap_ = exact_ ? cap : std::min(cap, cap_);
    r.exact_ = false;
    r.prune();
    return r;
}

LaurentElt LaurentElt::exact_part_below(int cutoff) const {
    LaurentElt r = *this;
    r.exact_ = true;
    for (auto it = r.c_.lower_bound(cutoff); it != r.c_.end();) it = r.c_.erase(it);
    return r;
}

bool LaurentElt::agrees_with(const LaurentElt& o) const {
    if (exact_ && o.exact_) return c_ == o.c_;
    int hi = std::min(exact_ ? o.cap_ : cap_, o.exact_ ? cap_ : o.cap_);
    for (auto& [k, v] : c_)
        if (k <= hi && !(o.coeff_or_zero(k) == v)) return false;
    for (auto& [k, v] : o.c_)
        if (k <= hi && !(coeff_or_zero(k) == v)) return false;
    return true;
}

std::string LaurentElt::str(const std::vector<std::string>& names) const {
    if (c_.empty()) return exact_ ? "0" : "O(pi^" + std::to_string(cap_ + 1) + ")";
    std::string s;
    for (auto& [k, v] : c_) {
        if (!s.empty()) s += " + ";
        s += "(" + v.str(names) + ")";
        if (k != 0) s += "*pi^" + std::to_string(k);
    }
    if (!exact_) s += " + O(pi^" + std::to_string(cap_ + 1) + ")";
    return s;
}

}  // namespace swanforge
