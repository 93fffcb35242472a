#include "twistcs/unipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace twistcs {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) { return powmod(a % m, m - 2, m); }  // m prime

// Deterministic list of 62-bit primes.
std::vector<u64> primes_for_bits(size_t bits_needed) {
    static std::vector<u64> cache;
    static mpz_class next_candidate = (mpz_class(1) << 61) + 1;
    size_t count = bits_needed / 60 + 2;
    while (cache.size() < count) {
        mpz_class pr;
        mpz_nextprime(pr.get_mpz_t(), next_candidate.get_mpz_t());
        next_candidate = pr;
        cache.push_back(mpz_get_ui(pr.get_mpz_t()));
    }
    return {cache.begin(), cache.begin() + static_cast<long>(count)};
}

// Univariate polynomial resultant over F_p via the Euclidean PRS identity
//   res(A,B) = (-1)^(deg A * deg B) * lc(B)^(deg A - deg R) * res(B, R),
// with res(B, const c) = c^deg(B) and res(B, 0) = 0 for deg B > 0.
// Coefficients ascending, no leading zeros.
u64 resultant_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
    auto deg = [](const std::vector<u64>& f) {
        return static_cast<long>(f.size()) - 1;
    };
    auto trim = [](std::vector<u64>& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    };
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    u64 res = 1;
    bool negate = false;
    if (deg(a) < deg(b)) {
        if ((deg(a) & 1) && (deg(b) & 1)) negate = !negate;
        std::swap(a, b);
    }
    while (true) {
        long da = deg(a), db = deg(b);
        if (db == 0) {
            res = mulmod(res, powmod(b[0], static_cast<u64>(da), p), p);
            break;
        }
        // remainder a mod b
        u64 lb_inv = invmod(b.back(), p);
        std::vector<u64> r = a;
        for (long i = da; i >= db; --i) {
            u64 f = mulmod(r[static_cast<size_t>(i)], lb_inv, p);
            if (f == 0) continue;
            for (long j = 0; j <= db; ++j) {
                size_t idx = static_cast<size_t>(i - db + j);
                u64 sub = mulmod(f, b[static_cast<size_t>(j)], p);
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        trim(r);
        if (r.empty()) return 0;  // nontrivial common factor
        long dr = deg(r);
        if ((da & 1) && (db & 1)) negate = !negate;
        res = mulmod(res, powmod(b.back(), static_cast<u64>(da - dr), p), p);
        a = std::move(b);
        b = std::move(r);
    }
    if (negate) res = p - res;
    return res;
}

// Lagrange interpolation over F_p from distinct points (x_i, y_i);
// returns ascending coefficients, size = points.size().
std::vector<u64> interpolate_mod(const std::vector<u64>& xs,
                                 const std::vector<u64>& ys, u64 p) {
    size_t n = xs.size();
    // master polynomial prod (X - x_i), ascending
    std::vector<u64> master(n + 1, 0);
    master[0] = 1;
    size_t md = 0;
    for (size_t i = 0; i < n; ++i) {
        // multiply by (X - x_i)
        for (size_t j = md + 1; j-- > 0;) {
            u64 hi = master[j];
            master[j + 1] = (master[j + 1] + hi) % p;
            master[j] = mulmod(hi, p - xs[i] % p, p);
        }
        ++md;
    }
    std::vector<u64> out(n, 0);
    std::vector<u64> q(n, 0);  // master / (X - x_i), reused buffer
    for (size_t i = 0; i < n; ++i) {
        // synthetic division of master by (X - x_i)
        u64 carry = master[n];
        for (size_t j = n; j-- > 0;) {
            q[j] = carry;
            carry = (master[j] + mulmod(carry, xs[i], p)) % p;
        }
        // denominator = q(x_i)
        u64 den = 0;
        for (size_t j = n; j-- > 0;) den = (mulmod(den, xs[i], p) + q[j]) % p;
        u64 w = mulmod(ys[i] % p, invmod(den, p), p);
        for (size_t j = 0; j < n; ++j)
            out[j] = (out[j] + mulmod(w, q[j], p)) % p;
    }
    return out;
}

// Dense coefficient table of p along `axis`: row i = coefficients (in the
// other variable, ascending) of (eliminated variable)^i.
std::vector<std::vector<BigInt>> coeff_rows(const BiPoly& p, int axis) {
    long de = p.degree(axis), dk = p.degree(1 - axis);
    std::vector<std::vector<BigInt>> rows(
        static_cast<size_t>(de + 1),
        std::vector<BigInt>(static_cast<size_t>(dk + 1), BigInt(0)));
    for (const auto& [k, c] : p.terms()) {
        long i = axis == 0 ? k.first : k.second;
        long j = axis == 0 ? k.second : k.first;
        rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = c;
    }
    return rows;
}

BigInt l1_norm_sum(const std::vector<std::vector<BigInt>>& rows) {
    BigInt s = 0;
    for (const auto& r : rows)
        for (const auto& c : r) s += abs(c);
    return s;
}

// Evaluate a coefficient row at integer point t mod p (Horner).
u64 eval_row_mod(const std::vector<BigInt>& row, u64 t, u64 p) {
    u64 v = 0;
    for (size_t i = row.size(); i-- > 0;) {
        u64 ci = mpz_fdiv_ui(row[i].get_mpz_t(), p);
        v = (mulmod(v, t, p) + ci) % p;
    }
    return v;
}

bool row_is_zero_at(const std::vector<BigInt>& row, const BigInt& t) {
    BigInt v = 0;
    for (size_t i = row.size(); i-- > 0;) v = v * t + row[i];
    return v == 0;
}

UniPolyQ from_integer_coeffs(const std::vector<BigInt>& c) {
    std::vector<BigRat> q;
    q.reserve(c.size());
    for (const auto& x : c) q.emplace_back(x);
    return UniPolyQ(std::move(q));
}

// Power of a univariate integer polynomial (ascending coefficients).
std::vector<BigInt> unipoly_pow(const std::vector<BigInt>& base, long e) {
    std::vector<BigInt> r{BigInt(1)};
    auto mul = [](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    std::vector<BigInt> b = base;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

}  // namespace

std::vector<BigInt> UniPolyQ::primitive_integer() const {
    BigInt den = 1;
    for (const auto& x : c) {
        BigInt d = x.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<BigInt> out;
    out.reserve(c.size());
    BigInt content = 0;
    for (const auto& x : c) {
        BigRat scaled = x * BigRat(den);
        out.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                out.back().get_mpz_t());
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    return out;
}

BiPoly derivative(const BiPoly& p, int axis) {
    BiPoly r(p.vars().first, p.vars().second);
    for (const auto& [k, c] : p.terms()) {
        long e = axis == 0 ? k.first : k.second;
        if (e == 0) continue;
        long i = axis == 0 ? k.first - 1 : k.first;
        long j = axis == 0 ? k.second : k.second - 1;
        r.add_term(i, j, c * BigInt(e));
    }
    return r;
}

UniPolyQ resultant(const BiPoly& p, const BiPoly& q, int axis) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("resultant: both polynomials zero");
    if (!p.has_nonnegative_exponents() || !q.has_nonnegative_exponents())
        throw std::invalid_argument("resultant: negative exponents not supported");
    if (p.is_zero() || q.is_zero()) return UniPolyQ();

    const long m = std::max(p.degree(axis), 0L);
    const long n = std::max(q.degree(axis), 0L);
    auto P = coeff_rows(p, axis);
    auto Q = coeff_rows(q, axis);

    // Constant cases: res(c, q) = c^deg(q), res(p, c) = c^deg(p),
    // res(c, c') = 1.
    if (m == 0 && n == 0) return from_integer_coeffs({BigInt(1)});
    if (m == 0) return from_integer_coeffs(unipoly_pow(P[0], n));
    if (n == 0) return from_integer_coeffs(unipoly_pow(Q[0], m));

    // Degree bound of the resultant in the kept variable.
    const long dp = p.degree(1 - axis), dq = q.degree(1 - axis);
    const long D = dp * n + dq * m;

    // Coefficient bound: |det| entries expand as a sum over permutations of
    // products of entry polynomials, so the l1 norm of the resultant is at
    // most (sum of l1 norms of p's coefficients)^n * (same for q)^m.
    BigInt sp = l1_norm_sum(P), sq = l1_norm_sum(Q);
    mpz_class bound;
    mpz_pow_ui(bound.get_mpz_t(), sp.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class bq;
    mpz_pow_ui(bq.get_mpz_t(), sq.get_mpz_t(), static_cast<unsigned long>(m));
    bound *= bq;
    bound *= 2;  // signed values
    size_t bound_bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    auto primes = primes_for_bits(bound_bits);

    // Evaluation points: nonnegative integers where neither leading
    // coefficient vanishes over Z (so specialization preserves degree for
    // every prime that also keeps it nonzero mod p).
    std::vector<long> points;
    points.reserve(static_cast<size_t>(D + 1));
    for (long t = 0; static_cast<long>(points.size()) <= D; ++t) {
        if (row_is_zero_at(P[static_cast<size_t>(m)], t)) continue;
        if (row_is_zero_at(Q[static_cast<size_t>(n)], t)) continue;
        points.push_back(t);
    }

    std::vector<std::vector<u64>> residues;  // per prime: coefficients mod p
    residues.reserve(primes.size());
    for (u64 pr : primes) {
        std::vector<u64> xs, ys;
        xs.reserve(points.size());
        ys.reserve(points.size());
        for (long t : points) {
            u64 tm = static_cast<u64>(t) % pr;
            // degree must not drop mod pr either
            if (eval_row_mod(P[static_cast<size_t>(m)], tm, pr) == 0) continue;
            if (eval_row_mod(Q[static_cast<size_t>(n)], tm, pr) == 0) continue;
            std::vector<u64> pa(static_cast<size_t>(m + 1)),
                qa(static_cast<size_t>(n + 1));
            for (long i = 0; i <= m; ++i)
                pa[static_cast<size_t>(i)] =
                    eval_row_mod(P[static_cast<size_t>(i)], tm, pr);
            for (long i = 0; i <= n; ++i)
                qa[static_cast<size_t>(i)] =
                    eval_row_mod(Q[static_cast<size_t>(i)], tm, pr);
            xs.push_back(tm);
            ys.push_back(resultant_mod(std::move(pa), std::move(qa), pr));
            if (static_cast<long>(xs.size()) > D) break;
        }
        if (static_cast<long>(xs.size()) <= D) {
            // Not enough valid points for this prime (leading coefficient
            // vanished mod pr at too many points) — extend the master point
            // list and retry from scratch for this prime.
            long t = points.back() + 1;
            while (static_cast<long>(xs.size()) <= D) {
                if (row_is_zero_at(P[static_cast<size_t>(m)], t) ||
                    row_is_zero_at(Q[static_cast<size_t>(n)], t)) {
                    ++t;
                    continue;
                }
                u64 tm = static_cast<u64>(t) % pr;
                if (eval_row_mod(P[static_cast<size_t>(m)], tm, pr) == 0 ||
                    eval_row_mod(Q[static_cast<size_t>(n)], tm, pr) == 0) {
                    ++t;
                    continue;
                }
                std::vector<u64> pa(static_cast<size_t>(m + 1)),
                    qa(static_cast<size_t>(n + 1));
                for (long i = 0; i <= m; ++i)
                    pa[static_cast<size_t>(i)] =
                        eval_row_mod(P[static_cast<size_t>(i)], tm, pr);
                for (long i = 0; i <= n; ++i)
                    qa[static_cast<size_t>(i)] =
                        eval_row_mod(Q[static_cast<size_t>(i)], tm, pr);
                xs.push_back(tm);
                ys.push_back(resultant_mod(std::move(pa), std::move(qa), pr));
                ++t;
            }
        }
        residues.push_back(interpolate_mod(xs, ys, pr));
    }

    // CRT combine, symmetric representative.
    std::vector<BigInt> coeffs(static_cast<size_t>(D + 1), BigInt(0));
    mpz_class mod = 1;
    for (size_t pi = 0; pi < primes.size(); ++pi) {
        mpz_class prz(static_cast<unsigned long>(primes[pi]));
        if (pi == 0) {
            for (long j = 0; j <= D; ++j)
                coeffs[static_cast<size_t>(j)] =
                    BigInt(static_cast<unsigned long>(residues[pi][static_cast<size_t>(j)]));
            mod = prz;
            continue;
        }
        mpz_class mod_inv;
        mpz_invert(mod_inv.get_mpz_t(), mod.get_mpz_t(), prz.get_mpz_t());
        for (long j = 0; j <= D; ++j) {
            auto& x = coeffs[static_cast<size_t>(j)];
            u64 r =
                mpz_fdiv_ui(x.get_mpz_t(), primes[pi]);
            u64 want = residues[pi][static_cast<size_t>(j)];
            u64 diff = (want + primes[pi] - r) % primes[pi];
            mpz_class k = mod_inv * mpz_class(static_cast<unsigned long>(diff));
            k %= prz;
            x += k * mod;
        }
        mod *= prz;
    }
    mpz_class half = mod / 2;
    for (auto& x : coeffs)
        if (x > half) x -= mod;

    return from_integer_coeffs(coeffs);
}

UniPolyQ discriminant(const BiPoly& p, int axis) {
    long d = p.degree(axis);
    if (d <= 0)
        throw std::invalid_argument(
            "discriminant: degree in the eliminated variable must be >= 1");
    if (d == 1) return from_integer_coeffs({BigInt(1)});
    UniPolyQ res = resultant(p, derivative(p, axis), axis);
    // divide by the leading coefficient polynomial (exact division in Q[y])
    auto rows = coeff_rows(p, axis);
    const auto& lc = rows[static_cast<size_t>(d)];
    std::vector<BigRat> num(res.c.begin(), res.c.end());
    std::vector<BigRat> den;
    for (const auto& x : lc) den.emplace_back(x);
    while (!den.empty() && den.back() == 0) den.pop_back();
    // long division num / den
    std::vector<BigRat> quot;
    if (num.size() >= den.size()) {
        quot.assign(num.size() - den.size() + 1, BigRat(0));
        for (size_t i = num.size(); i-- >= den.size() && i + 1 >= den.size();) {
            BigRat f = num[i] / den.back();
            quot[i - (den.size() - 1)] = f;
            if (f != 0)
                for (size_t j = 0; j < den.size(); ++j)
                    num[i - (den.size() - 1) + j] -= f * den[j];
            if (i == den.size() - 1) break;
        }
    }
    for (const auto& r : num)
        if (r != 0)
            throw std::logic_error(
                "discriminant: resultant not divisible by leading coefficient");
    if ((d * (d - 1) / 2) % 2 != 0)
        for (auto& x : quot) x = -x;
    return UniPolyQ(std::move(quot));
}

BigInt sylvester_resultant_exact(const std::vector<BigInt>& p,
                                 const std::vector<BigInt>& q) {
    long m = static_cast<long>(p.size()) - 1;
    long n = static_cast<long>(q.size()) - 1;
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    long N = m + n;
    // rows: n rows of p (descending coefficients, shifted), then m rows of q
    std::vector<std::vector<BigInt>> a(static_cast<size_t>(N),
                                       std::vector<BigInt>(static_cast<size_t>(N), BigInt(0)));
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i)
            a[static_cast<size_t>(r)][static_cast<size_t>(r + i)] =
                p[static_cast<size_t>(m - i)];
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i)
            a[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] =
                q[static_cast<size_t>(n - i)];
    // Bareiss fraction-free elimination
    BigInt prev = 1;
    int sign = 1;
    for (long k = 0; k < N - 1; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            long swap_row = -1;
            for (long r = k + 1; r < N; ++r)
                if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (long i = k + 1; i < N; ++i)
            for (long j = k + 1; j < N; ++j) {
                BigInt v = a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                               a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                           a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                               a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v / prev;
            }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    BigInt det = a[static_cast<size_t>(N - 1)][static_cast<size_t>(N - 1)];
    return sign > 0 ? det : -det;
}

}  // namespace twistcs
