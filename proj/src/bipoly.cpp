#include "twistcs/bipoly.hpp"

#include <algorithm>
#include <limits>

namespace twistcs {

long BiPoly::degree(int axis) const {
    if (terms_.empty()) return -1;
    long d = std::numeric_limits<long>::min();
    for (const auto& [k, c] : terms_)
        d = std::max(d, axis == 0 ? k.first : k.second);
    return d;
}

long BiPoly::min_exponent(int axis) const {
    if (terms_.empty()) return 0;
    long d = std::numeric_limits<long>::max();
    for (const auto& [k, c] : terms_)
        d = std::min(d, axis == 0 ? k.first : k.second);
    return d;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(vars_.first, vars_.second);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    require_same_vars(o);
    BiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    require_same_vars(o);
    BiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    require_same_vars(o);
    BiPoly r(vars_.first, vars_.second);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly BiPoly::operator*(const BigInt& c) const {
    BiPoly r(vars_.first, vars_.second);
    if (c == 0) return r;
    for (const auto& [k, t] : terms_) r.terms_[k] = t * c;
    return r;
}

BiPoly BiPoly::pow(unsigned long e) const {
    BiPoly result = BiPoly::constant(vars_.first, vars_.second, 1);
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return result;
}

BiPoly BiPoly::shifted(long di, long dj) const {
    BiPoly r(vars_.first, vars_.second);
    for (const auto& [k, c] : terms_) r.terms_[{k.first + di, k.second + dj}] = c;
    return r;
}

BigInt BiPoly::content() const {
    BigInt g = 0;
    for (const auto& [k, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

bool BiPoly::has_nonnegative_exponents() const {
    for (const auto& [k, c] : terms_)
        if (k.first < 0 || k.second < 0) return false;
    return true;
}

UnitNormalized unit_normalize(const BiPoly& p) {
    UnitNormalized out;
    if (p.is_zero()) {
        out.poly = p;
        return out;
    }
    out.content = p.content();
    out.shift1 = p.min_exponent(0);
    out.shift2 = p.min_exponent(1);
    BiPoly q(p.vars().first, p.vars().second);
    for (const auto& [k, c] : p.terms())
        q.set_term(k.first - out.shift1, k.second - out.shift2, c / out.content);
    // The term map is ordered by (i, j) ascending, so begin() is the
    // lexicographically least term.
    if (q.terms().begin()->second < 0) {
        q = -q;
        out.sign_flipped = true;
    }
    out.poly = std::move(q);
    return out;
}

bool equal_up_to_unit(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() == q.is_zero();
    return unit_normalize(p).poly == unit_normalize(q).poly;
}

SubstResult substitute(const BiPoly& p, const RationalSubst& s) {
    if (s.den1.is_zero() || s.den2.is_zero())
        throw std::invalid_argument("substitute: denominator identically zero");
    const auto& tv = s.num1.vars();
    if (p.is_zero())
        return {BiPoly(tv.first, tv.second), false};

    const long d1 = p.degree(0), m1 = p.min_exponent(0);
    const long d2 = p.degree(1), m2 = p.min_exponent(1);

    // Precompute powers of the four building blocks covering the needed range.
    auto powers = [&](const BiPoly& b, long top) {
        std::vector<BiPoly> pw;
        pw.reserve(static_cast<size_t>(top) + 1);
        pw.push_back(BiPoly::constant(tv.first, tv.second, 1));
        for (long e = 1; e <= top; ++e) pw.push_back(pw.back() * b);
        return pw;
    };
    const auto n1 = powers(s.num1, d1 - std::min(m1, 0L) + std::max(0L, 0L));
    const auto e1 = powers(s.den1, d1 - m1);
    const auto n2 = powers(s.num2, d2 - std::min(m2, 0L));
    const auto e2 = powers(s.den2, d2 - m2);

    // p = sum c_ij x^i y^j.  Multiply through by den1^(d1-m1) den2^(d2-m2)
    // (after factoring out x^m1 y^m2, whose image is a global unit we may
    // drop, since the result is unit-normalized anyway):
    //   term -> c_ij num1^(i-m1) den1^(d1-i) num2^(j-m2) den2^(d2-j).
    BiPoly acc(tv.first, tv.second);
    for (const auto& [k, c] : p.terms()) {
        const long i = k.first, j = k.second;
        BiPoly t = n1[static_cast<size_t>(i - m1)] *
                   e1[static_cast<size_t>(d1 - i)] *
                   n2[static_cast<size_t>(j - m2)] *
                   e2[static_cast<size_t>(d2 - j)];
        acc += t * c;
    }
    UnitNormalized un = unit_normalize(acc);
    return {std::move(un.poly), un.sign_flipped};
}

}  // namespace twistcs
