#include "twistcs/twistgen.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace twistcs {

namespace {

// floor division toward negative infinity (C++ / truncates toward zero)
long floordiv(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

BigInt binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

BiPoly make_vb(std::initializer_list<std::tuple<long, long, long>> terms) {
    BiPoly p("V", "B");
    for (auto& [i, j, c] : terms) p.add_term(i, j, BigInt(c));
    return p;
}

BiPoly make_lm(std::initializer_list<std::tuple<long, long, long>> terms) {
    BiPoly p("L", "M");
    for (auto& [i, j, c] : terms) p.add_term(i, j, BigInt(c));
    return p;
}

// P_-2 = (2B^2-2)V + 2B^2-1
const BiPoly& p_minus2() {
    static const BiPoly p =
        make_vb({{1, 2, 2}, {1, 0, -2}, {0, 2, 2}, {0, 0, -1}});
    return p;
}
// P_0 = 1
const BiPoly& p_zero() {
    static const BiPoly p = make_vb({{0, 0, 1}});
    return p;
}
// P_2 = (4B^4-8B^2+4)V^2 + (2-2B^2)V - 4B^4+6B^2-1
const BiPoly& p_plus2() {
    static const BiPoly p = make_vb({{2, 4, 4},
                                     {2, 2, -8},
                                     {2, 0, 4},
                                     {1, 0, 2},
                                     {1, 2, -2},
                                     {0, 4, -4},
                                     {0, 2, 6},
                                     {0, 0, -1}});
    return p;
}

// A_-4, A_-2, A_0, A_2 and A_u as printed
const BiPoly& a_minus4() {
    static const BiPoly p = make_lm({{0, 0, 1},
                                     {1, 0, -1},
                                     {1, 2, 2},
                                     {1, 4, 2},
                                     {2, 4, 1},
                                     {2, 6, -1},
                                     {1, 8, -1},
                                     {1, 10, 1},
                                     {2, 10, 2},
                                     {2, 12, 2},
                                     {2, 14, -1},
                                     {3, 14, 1}});
    return p;
}
const BiPoly& a_minus2() {
    static const BiPoly p = make_lm({{0, 0, 1}, {1, 6, 1}});
    return p;
}
const BiPoly& a_zero() {
    static const BiPoly p = make_lm({{0, 0, -1}});
    return p;
}
const BiPoly& a_plus2() {
    static const BiPoly p = make_lm({{1, 0, 1},
                                     {1, 2, -1},
                                     {0, 4, -1},
                                     {1, 4, -2},
                                     {2, 4, -1},
                                     {1, 6, -1},
                                     {1, 8, 1}});
    return p;
}

// M^4 (1 + L M^2)^4
const BiPoly& a_shift() {
    static const BiPoly p = BiPoly::monomial("L", "M", 0, 4, 1) *
                            make_lm({{0, 0, 1}, {1, 2, 1}}).pow(4);
    return p;
}

std::mutex cache_mutex;

}  // namespace

BiPoly pdist_multiplier() {
    return make_vb(
        {{2, 4, 4}, {2, 2, -8}, {2, 0, 4}, {0, 4, -4}, {0, 2, 8}, {0, 0, -2}});
}

BiPoly apoly_u() {
    return make_lm({{0, 0, 1},
                    {1, 0, -1},
                    {1, 2, 2},
                    {0, 4, 1},
                    {1, 4, 2},
                    {2, 4, 1},
                    {1, 6, 2},
                    {1, 8, -1},
                    {2, 8, 1}});
}

long normalize_twist_param(long m) { return m % 2 == 0 ? m : -m - 1; }

PDist pdist_recursive(long n) {
    static std::map<long, BiPoly> cache = {
        {-1, p_minus2()}, {0, p_zero()}, {1, p_plus2()}};
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto compute = [&](auto&& self, long k) -> const BiPoly& {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        const BiPoly mult = pdist_multiplier();
        BiPoly result = k > 1 ? mult * self(self, k - 1) - self(self, k - 2)
                              : mult * self(self, k + 1) - self(self, k + 2);
        return cache.emplace(k, std::move(result)).first->second;
    };
    return {n, compute(compute, n)};
}

PDist pdist_explicit(long n) {
    // Common denominator: the factor (1 + 2/(V-1))^f = ((V+1)/(V-1))^f with
    // f = floor((1+i)/2) <= |n|, so multiply every term by (V-1)^|n| and
    // divide back out at the end by synthetic division (exact).
    const BiPoly one = BiPoly::constant("V", "B", 1);
    const BiPoly vminus1 = make_vb({{1, 0, 1}, {0, 0, -1}});
    const BiPoly vplus1 = make_vb({{1, 0, 1}, {0, 0, 1}});
    const long t = n >= 0 ? n : -n;

    BiPoly sum("V", "B");
    if (n >= 0) {
        // sum_{i=0}^{2n} C(n+floor(i/2), i) (2(B^2-1)(1-V))^i ((V+1)/(V-1))^fi
        const BiPoly base = make_vb({{0, 2, 2}, {0, 0, -2}}) *
                            make_vb({{0, 0, 1}, {1, 0, -1}});  // 2(B^2-1)(1-V)
        for (long i = 0; i <= 2 * n; ++i) {
            long fi = floordiv(1 + i, 2);
            BigInt c = binom(n + floordiv(i, 2), i);
            if (c == 0) continue;
            sum += base.pow(static_cast<unsigned long>(i)) *
                   vplus1.pow(static_cast<unsigned long>(fi)) *
                   vminus1.pow(static_cast<unsigned long>(t - fi)) * c;
        }
    } else {
        // sum_{i=0}^{-2n-1} C(-n+floor((i-1)/2), i) (2(B^2-1)(V-1))^i
        //                   ((V+1)/(V-1))^fi
        const BiPoly base = make_vb({{0, 2, 2}, {0, 0, -2}}) *
                            make_vb({{1, 0, 1}, {0, 0, -1}});  // 2(B^2-1)(V-1)
        for (long i = 0; i <= -2 * n - 1; ++i) {
            long fi = floordiv(1 + i, 2);
            BigInt c = binom(-n + floordiv(i - 1, 2), i);
            if (c == 0) continue;
            // term carries (V-1)^i from the base power; total (V-1) exponent
            // after clearing is i + t - fi >= 0
            sum += base.pow(static_cast<unsigned long>(i)) *
                   vplus1.pow(static_cast<unsigned long>(fi)) *
                   vminus1.pow(static_cast<unsigned long>(t - fi)) * c;
        }
    }

    // Divide by (V-1)^t exactly: synthetic division by the monic (V-1),
    // t times, treating the polynomial as univariate in V with BiPoly rows.
    BiPoly cur = sum;
    for (long rep = 0; rep < t; ++rep) {
        long dv = cur.degree(0);
        // coefficients of V^i as polynomials in B
        std::map<long, std::map<long, BigInt>> rows;
        for (const auto& [k, c] : cur.terms()) rows[k.first][k.second] = c;
        BiPoly quot("V", "B");
        std::map<long, BigInt> carry;  // running remainder row (poly in B)
        for (long i = dv; i >= 1; --i) {
            // quotient coefficient of V^(i-1) = carry + row[i]
            auto it = rows.find(i);
            if (it != rows.end())
                for (const auto& [j, c] : it->second) {
                    carry[j] += c;
                    if (carry[j] == 0) carry.erase(j);
                }
            for (const auto& [j, c] : carry) quot.add_term(i - 1, j, c);
        }
        // remainder = row[0] + carry must vanish
        std::map<long, BigInt> rem = carry;
        auto it0 = rows.find(0);
        if (it0 != rows.end())
            for (const auto& [j, c] : it0->second) {
                rem[j] += c;
                if (rem[j] == 0) rem.erase(j);
            }
        if (!rem.empty())
            throw std::logic_error(
                "pdist_explicit: denominators did not cancel (nonzero "
                "remainder dividing by V-1)");
        cur = std::move(quot);
    }
    return {n, cur};
}

APoly apoly_recursive(long n) {
    static std::map<long, BiPoly> cache = {
        {-2, a_minus4()}, {-1, a_minus2()}, {0, a_zero()}, {1, a_plus2()}};
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto compute = [&](auto&& self, long k) -> const BiPoly& {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        const BiPoly au = apoly_u();
        BiPoly result = k > 1
                            ? au * self(self, k - 1) - a_shift() * self(self, k - 2)
                            : au * self(self, k + 1) - a_shift() * self(self, k + 2);
        return cache.emplace(k, std::move(result)).first->second;
    };
    return {n, compute(compute, n), false};
}

APoly apoly_explicit(long n) {
    // Fold the prefactor into each summand so that all exponents stay
    // nonnegative:
    //   n >= 0: -M^(2n) (1+LM^2)^(2n) * sum_i C(n+floor(i/2), i) (1-M^2)^i
    //           (1+LM^2)^(-i) (L-1)^floor(i/2) (LM^2 - M^-2)^fi
    //   with (LM^2 - M^-2)^fi = M^(-2 fi) (LM^4 - 1)^fi, fi = floor((1+i)/2);
    //   per-term M exponent 2n - 2 fi >= 0 and (1+LM^2) exponent 2n - i >= 0.
    //   n < 0 analogously with prefactor M^(-2n) (1+LM^2)^(-2n-1) and
    //   (M^2-1)^i, coefficient C(-n+floor((i-1)/2), i).
    const BiPoly onePlusLM2 = make_lm({{0, 0, 1}, {1, 2, 1}});
    const BiPoly lm4Minus1 = make_lm({{1, 4, 1}, {0, 0, -1}});
    const BiPoly lMinus1 = make_lm({{1, 0, 1}, {0, 0, -1}});

    BiPoly sum("L", "M");
    if (n >= 0) {
        const BiPoly oneMinusM2 = make_lm({{0, 0, 1}, {0, 2, -1}});
        for (long i = 0; i <= 2 * n; ++i) {
            long fi = floordiv(1 + i, 2);
            BigInt c = binom(n + floordiv(i, 2), i);
            if (c == 0) continue;
            BiPoly term = oneMinusM2.pow(static_cast<unsigned long>(i)) *
                          onePlusLM2.pow(static_cast<unsigned long>(2 * n - i)) *
                          lMinus1.pow(static_cast<unsigned long>(floordiv(i, 2))) *
                          lm4Minus1.pow(static_cast<unsigned long>(fi)) * c;
            sum += term.shifted(0, 2 * n - 2 * fi);
        }
        sum = -sum;
    } else {
        const BiPoly m2Minus1 = make_lm({{0, 2, 1}, {0, 0, -1}});
        for (long i = 0; i <= -2 * n - 1; ++i) {
            long fi = floordiv(1 + i, 2);
            BigInt c = binom(-n + floordiv(i - 1, 2), i);
            if (c == 0) continue;
            BiPoly term =
                m2Minus1.pow(static_cast<unsigned long>(i)) *
                onePlusLM2.pow(static_cast<unsigned long>(-2 * n - 1 - i)) *
                lMinus1.pow(static_cast<unsigned long>(floordiv(i, 2))) *
                lm4Minus1.pow(static_cast<unsigned long>(fi)) * c;
            sum += term.shifted(0, -2 * n - 2 * fi);
        }
    }

    // Cross-check against the recursive generator.
    APoly rec = apoly_recursive(n);
    if (sum != rec.poly && !equal_up_to_unit(sum, rec.poly))
        throw std::logic_error(
            "apoly_explicit: generators disagree beyond a unit for n=" +
            std::to_string(n));
    return {n, sum, false};
}

// Exact division in Z[L,M]. Returns nothing if d does not divide p. The
// divisor's lowest term (in (M,L)-ascending order) must have coefficient
// +/-1, which holds for the factors we strip here. Greedy cancellation of
// the lowest remaining term terminates because that term strictly increases
// and the quotient exponents are bounded by deg(p).
static std::optional<BiPoly> div_exact(const BiPoly& p, const BiPoly& d) {
    auto lowest = [](const BiPoly& f) {
        auto best = f.terms().begin();
        for (auto it = std::next(best); it != f.terms().end(); ++it)
            if (std::pair(it->first.second, it->first.first) <
                std::pair(best->first.second, best->first.first))
                best = it;
        return best;
    };
    if (d.terms().empty())
        throw std::invalid_argument("div_exact: division by zero");
    auto dlow = lowest(d);
    const auto [dl, dm] = dlow->first;
    const BigInt u = dlow->second;
    if (abs(u) != 1)
        throw std::invalid_argument("div_exact: divisor trailing coefficient not a unit");
    const long max_l = p.degree(0), max_m = p.degree(1);
    BiPoly r = p;
    BiPoly q = BiPoly::zero(p.vars().first, p.vars().second);
    while (!r.terms().empty()) {
        auto rlow = lowest(r);
        long i = rlow->first.first - dl, j = rlow->first.second - dm;
        if (i < 0 || j < 0 || i > max_l || j > max_m) return std::nullopt;
        BiPoly mono = BiPoly::monomial(p.vars().first, p.vars().second, i, j,
                                       u == 1 ? rlow->second : -rlow->second);
        q += mono;
        r -= mono * d;
    }
    return q;
}

APoly apoly_from_pdist(long n, bool* sign_flipped) {
    RationalSubst s;
    // V -> (M^2+1)(LM^2-1) / ((M^2-1)(LM^2+1))
    s.num1 = make_lm({{0, 2, 1}, {0, 0, 1}}) * make_lm({{1, 2, 1}, {0, 0, -1}});
    s.den1 = make_lm({{0, 2, 1}, {0, 0, -1}}) * make_lm({{1, 2, 1}, {0, 0, 1}});
    // B -> (M + 1/M)/2 = (M^2+1)/(2M)
    s.num2 = make_lm({{0, 2, 1}, {0, 0, 1}});
    s.den2 = make_lm({{0, 1, 2}});
    SubstResult r = substitute(pdist_recursive(n).poly, s);

    // Clearing denominators multiplies by ((M^2-1)(LM^2+1))^degV (2M)^degB;
    // the monomial part is normalized away, but surplus powers of the two
    // non-monomial factors survive and must be divided out exactly. The
    // A-polynomial itself contains neither factor, so strip while divisible.
    BiPoly a = std::move(r.poly);
    const BiPoly m2_minus_1 = make_lm({{0, 2, 1}, {0, 0, -1}});
    const BiPoly lm2_plus_1 = make_lm({{1, 2, 1}, {0, 0, 1}});
    for (const BiPoly* f : {&m2_minus_1, &lm2_plus_1})
        while (!a.terms().empty()) {
            auto quot = div_exact(a, *f);
            if (!quot) break;
            a = std::move(*quot);
        }
    UnitNormalized un = unit_normalize(a);
    if (sign_flipped) *sign_flipped = r.sign_flipped != un.sign_flipped;
    return {n, std::move(un.poly), true};
}

}  // namespace twistcs
