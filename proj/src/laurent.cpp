#include "klrx/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace klrx {

namespace {
constexpr long kInf = std::numeric_limits<long>::max() / 4;
}

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) coeffs_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
    return p;
}

LaurentPoly LaurentPoly::q() { return monomial(Int(1), 1); }

Int LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (coeffs_.empty()) throw Error("min_exp of zero");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coeffs_.empty()) throw Error("max_exp of zero");
    return coeffs_.rbegin()->first;
}

void LaurentPoly::strip() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
    if (bound_) {
        coeffs_.erase(coeffs_.upper_bound(*bound_), coeffs_.end());
    }
}

LaurentPoly LaurentPoly::truncate(int bound) const {
    LaurentPoly r = *this;
    r.bound_ = bound_ ? std::min(*bound_, bound) : bound;
    r.strip();
    return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    if (bound_) r.bound_ = *bound_ + k;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    if (bound_) throw Error("bar of truncated series");
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

bool LaurentPoly::nonneg() const {
    for (auto& [e, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeffs_) coeffs_[e] += c;
    if (o.bound_) bound_ = bound_ ? std::min(*bound_, *o.bound_) : *o.bound_;
    strip();
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    // Bound of the product: smallest exponent that could receive an
    // unknown contribution, minus one.
    long limit = kInf;
    auto consider = [&](const LaurentPoly& t, const LaurentPoly& u) {
        if (!t.bound_) return;
        long tb = *t.bound_;
        if (!u.coeffs_.empty()) limit = std::min(limit, tb + 1 + u.min_exp());
        if (u.bound_) limit = std::min(limit, tb + 1 + *u.bound_ + 1);
    };
    consider(*this, o);
    consider(o, *this);
    LaurentPoly r;
    if (limit < kInf) r.bound_ = static_cast<int>(limit - 1);
    for (auto& [e1, c1] : coeffs_)
        for (auto& [e2, c2] : o.coeffs_) {
            long e = static_cast<long>(e1) + e2;
            if (r.bound_ && e > *r.bound_) continue;
            r.coeffs_[static_cast<int>(e)] += c1 * c2;
        }
    r.strip();
    return r;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
    LaurentPoly r = *this;
    for (auto& [e, v] : r.coeffs_) v *= c;
    r.strip();
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return coeffs_ == o.coeffs_ && bound_ == o.bound_;
}

bool LaurentPoly::eq_to_bound(const LaurentPoly& o) const {
    long b = kInf;
    if (bound_) b = *bound_;
    if (o.bound_) b = std::min(b, static_cast<long>(*o.bound_));
    for (auto& [e, c] : coeffs_) {
        if (e > b) continue;
        if (o.coeff(e) != c) return false;
    }
    for (auto& [e, c] : o.coeffs_) {
        if (e > b) continue;
        if (coeff(e) != c) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw Error("division by zero");
    if (d.bound_ || bound_) throw Error("exact_div requires exact operands");
    if (is_zero()) return LaurentPoly();
    LaurentPoly rem = *this, quot;
    const int dlead = d.max_exp();
    const Int& dc = d.coeffs().rbegin()->second;
    const int min_quot = min_exp() - d.min_exp();
    while (!rem.is_zero()) {
        int e = rem.max_exp();
        if (e - dlead < min_quot) throw Error("inexact Laurent division");
        Int c = rem.coeff(e);
        if (c % dc != 0) throw Error("inexact Laurent division");
        Int f = c / dc;
        quot.coeffs_[e - dlead] += f;
        rem += d.shift(e - dlead) * (-f);
    }
    quot.strip();
    if (!(quot * d == *this)) throw Error("inexact Laurent division (check)");
    return quot;
}

LaurentPoly LaurentPoly::series_div(const LaurentPoly& d, int bound) const {
    if (d.is_zero()) throw Error("series division by zero");
    if (d.bound_) throw Error("series divisor must be exact");
    int dlow = d.min_exp();
    const Int& dc = d.coeffs().begin()->second;
    if (dc != 1 && dc != -1) throw Error("series divisor must have unit lowest coefficient");
    long b = bound;
    if (bound_) b = std::min(b, static_cast<long>(*bound_));
    LaurentPoly quot;
    quot.bound_ = static_cast<int>(b - dlow);
    LaurentPoly rem = truncate(static_cast<int>(b));
    while (!rem.is_zero()) {
        int e = rem.min_exp();
        Int c = rem.coeff(e);
        Int f = c / dc;
        int qe = e - dlow;
        if (qe > *quot.bound_) break;
        quot.coeffs_[qe] = f;
        rem += (d * (-f)).shift(qe).truncate(static_cast<int>(b));
    }
    quot.strip();
    return quot;
}

std::string LaurentPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0)
            os << c.get_str();
        else if (c == 1)
            os << "q^" << e;
        else if (c == -1)
            os << "-q^" << e;
        else
            os << c.get_str() << "*q^" << e;
    }
    if (first && !bound_) os << "0";
    if (bound_) {
        if (!first) os << " + ";
        os << "O(q^" << (*bound_ + 1) << ")";
    }
    return os.str();
}

LaurentPoly qint(int n, QVariant v) {
    if (n < 0) throw Error("qint: n must be nonnegative");
    LaurentPoly r;
    for (int k = 0; k < n; ++k) r += LaurentPoly::monomial(Int(1), n - 1 - 2 * k);
    switch (v) {
        case QVariant::Plain: return r;
        case QVariant::Plus: return r.shift(n - 1);
        case QVariant::Minus: return r.shift(-(n - 1));
    }
    return r;
}

LaurentPoly qfact(int n, QVariant v) {
    LaurentPoly r = LaurentPoly::one();
    for (int k = 1; k <= n; ++k) r = r * qint(k, v);
    return r;
}

LaurentPoly qbinom(int n, int m, QVariant v) {
    if (m < 0 || m > n) throw Error("qbinom: need 0 <= m <= n");
    return qfact(n, v).exact_div(qfact(m, v) * qfact(n - m, v));
}

LaurentPoly qdim_poly(int nvars, int bound) {
    LaurentPoly r = LaurentPoly::one().truncate(bound);
    LaurentPoly g;  // 1/(1-q^2) truncated
    for (int e = 0; e <= bound; e += 2) g += LaurentPoly::monomial(Int(1), e);
    g = g.truncate(bound);
    for (int i = 0; i < nvars; ++i) r = r * g;
    return r;
}

LaurentPoly qdim_sym(int k, int bound) {
    LaurentPoly r = LaurentPoly::one().truncate(bound);
    for (int i = 1; i <= k; ++i) {
        LaurentPoly g;
        for (int e = 0; e <= bound; e += 2 * i) g += LaurentPoly::monomial(Int(1), e);
        r = r * g.truncate(bound);
    }
    return r;
}

GradedRank::GradedRank(LaurentPoly v) : value(std::move(v)) {
    if (!value.nonneg()) throw Error("GradedRank with negative coefficient");
}

}  // namespace klrx
