#include "twistcs/geom.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace twistcs {

namespace {

using Cx = std::complex<double>;

std::mutex cache_mutex;

// P_2n re-expressed over s = B^2 - 1: table[i] = ascending s-coefficients of
// the V^i coefficient, exact integers and their double images.
struct SBasis {
    long deg_v = 0;
    std::vector<std::vector<double>> coeff;  // [v_exp][s_exp]
};

const SBasis& sbasis(long n) {
    static std::map<long, SBasis> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const BiPoly& p = pdist_recursive(n).poly;
    SBasis sb;
    sb.deg_v = std::max(p.degree(0), 0L);
    std::vector<std::vector<BigInt>> exact(static_cast<size_t>(sb.deg_v) + 1);
    for (const auto& [key, c] : p.terms()) {
        auto [i, j] = key;
        if (j % 2 != 0)
            throw std::logic_error("sbasis: odd power of B in P_2n");
        // B^j = (1+s)^(j/2) = sum_m C(j/2, m) s^m
        long half = j / 2;
        auto& row = exact[static_cast<size_t>(i)];
        if (row.size() < static_cast<size_t>(half) + 1)
            row.resize(static_cast<size_t>(half) + 1, BigInt(0));
        BigInt binom;
        for (long m = 0; m <= half; ++m) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(half),
                         static_cast<unsigned long>(m));
            row[static_cast<size_t>(m)] += c * binom;
        }
    }
    sb.coeff.resize(exact.size());
    for (size_t i = 0; i < exact.size(); ++i) {
        sb.coeff[i].reserve(exact[i].size());
        for (const BigInt& x : exact[i]) sb.coeff[i].push_back(x.get_d());
    }
    return cache.emplace(n, std::move(sb)).first->second;
}

int sign_of(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

// Exact sign of sum_i c[i] * (p / 2^e)^i  (c integer, ascending).
int sign_at_dyadic(const std::vector<BigInt>& c, unsigned long p,
                   unsigned long e) {
    if (c.empty()) return 0;
    BigInt r = c.back(), t;
    size_t d = c.size() - 1;
    for (size_t i = d; i-- > 0;) {
        r *= static_cast<unsigned long>(p);
        mpz_mul_2exp(t.get_mpz_t(), c[i].get_mpz_t(),
                     e * static_cast<unsigned long>(d - i));
        r += t;
    }
    return sign_of(r);
}

// Same, with an arbitrary-precision dyadic abscissa p / 2^e.
int sign_at_dyadic_big(const std::vector<BigInt>& c, const BigInt& p,
                       unsigned long e) {
    if (c.empty()) return 0;
    BigInt r = c.back(), t;
    size_t d = c.size() - 1;
    for (size_t i = d; i-- > 0;) {
        r *= p;
        mpz_mul_2exp(t.get_mpz_t(), c[i].get_mpz_t(),
                     e * static_cast<unsigned long>(d - i));
        r += t;
    }
    return sign_of(r);
}

struct CollisionOutcome {
    bool ok = false;
    double v_star = 0.0;
};

CollisionOutcome collision_test(long n, double a0, double eps) {
    std::vector<Cx> r0 = all_roots(specialize(n, ConeAngle(a0)));
    if (r0.size() < 2) return {};
    double best = std::numeric_limits<double>::infinity();
    Cx vstar;
    for (size_t i = 0; i < r0.size(); ++i)
        for (size_t j = i + 1; j < r0.size(); ++j) {
            double d = std::abs(r0[i] - r0[j]);
            if (d < best) {
                best = d;
                vstar = 0.5 * (r0[i] + r0[j]);
            }
        }
    if (std::abs(vstar.imag()) > 1e-5 * (1.0 + std::abs(vstar))) return {};

    auto two_nearest = [&](double alpha, Cx target) {
        std::vector<Cx> r = all_roots(specialize(n, ConeAngle(alpha)));
        std::sort(r.begin(), r.end(), [&](Cx a, Cx b) {
            return std::abs(a - target) < std::abs(b - target);
        });
        return std::pair<Cx, Cx>(r[0], r.size() > 1 ? r[1] : r[0]);
    };

    auto [m0, m1] = two_nearest(a0 - eps, vstar);
    bool below = std::abs(m0.imag()) > 1e-7 &&
                 std::abs(m0 - std::conj(m1)) < 1e-3 * (1.0 + std::abs(m0));
    auto [p0, p1] = two_nearest(std::min(a0 + eps, M_PI), vstar);
    bool above = std::abs(p0.imag()) < 1e-7 * (1.0 + std::abs(p0)) &&
                 std::abs(p1.imag()) < 1e-7 * (1.0 + std::abs(p1));
    return {below && above, vstar.real()};
}

bool is_default_config(const GeomConfig& cfg) {
    GeomConfig d;
    return cfg.collision_eps == d.collision_eps &&
           cfg.alpha_tol == d.alpha_tol && cfg.sweep_points == d.sweep_points &&
           cfg.jump_bound == d.jump_bound;
}

Alpha0Result find_alpha0_impl(long n, const GeomConfig& cfg) {
    const std::vector<BigInt>& dz = pdist_discriminant_b(n);
    if (dz.size() < 2)
        throw GeometricError("find_alpha0: discriminant is constant");

    // Exact sign sweep over B = j / 2^e0 for j = 1 .. 2^(e0-1)  (B in (0, 1/2]).
    unsigned long e0 = 1;
    while ((1UL << e0) < 2UL * static_cast<unsigned long>(cfg.sweep_points))
        ++e0;
    unsigned long jmax = 1UL << (e0 - 1);
    std::vector<int> sg(jmax + 1, 0);
    for (unsigned long j = 1; j <= jmax; ++j) sg[j] = sign_at_dyadic(dz, j, e0);

    // Bisect until the bracket is narrower than alpha_tol/4 in B (the map
    // alpha = 2 arccos(B) has |d alpha / d B| <= 2.31 on (0, 1/2]).
    std::vector<double> b_candidates;
    auto bisect = [&](unsigned long j_lo) {
        BigInt lo(static_cast<unsigned long>(j_lo));
        unsigned long e = e0;
        int s_lo = sg[j_lo];
        while (std::ldexp(1.0, -static_cast<int>(e)) > cfg.alpha_tol / 4.0) {
            BigInt mid = lo * 2 + 1;
            int s_mid = sign_at_dyadic_big(dz, mid, e + 1);
            ++e;
            if (s_mid == 0) {
                b_candidates.push_back(mid.get_d() * std::ldexp(1.0, -static_cast<int>(e)));
                return;
            }
            if (s_mid == s_lo)
                lo = mid;
            else
                lo = lo * 2;
        }
        b_candidates.push_back((lo.get_d() + 0.5) * std::ldexp(1.0, -static_cast<int>(e)));
    };
    for (unsigned long j = 1; j <= jmax; ++j) {
        if (sg[j] == 0) {
            b_candidates.push_back(std::ldexp(static_cast<double>(j), -static_cast<int>(e0)));
            continue;
        }
        if (j < jmax && sg[j + 1] != 0 && sg[j] * sg[j + 1] < 0) bisect(j);
    }

    Alpha0Result res;
    for (double b : b_candidates) res.candidates.push_back(2.0 * std::acos(b));
    std::sort(res.candidates.begin(), res.candidates.end());

    double best_alpha = -1.0, best_vstar = 0.0;
    for (double a : res.candidates) {
        CollisionOutcome c = collision_test(n, a, cfg.collision_eps);
        if (c.ok) {
            res.passing.push_back(a);
            if (a > best_alpha) {
                best_alpha = a;
                best_vstar = c.v_star;
            }
        }
    }
    if (res.passing.empty())
        throw GeometricError(
            "find_alpha0: no discriminant root passes the collision test");
    res.alpha0 = best_alpha;
    res.B0 = std::cos(best_alpha / 2.0);
    res.V_star = best_vstar;
    return res;
}

// Chordal (Riemann-sphere) distance. It is invariant under z -> 1/z, so the
// same step bound works at the collision anchor (|W| ~ 1/|V*| can be large)
// and toward the cusp (W -> 0); Euclidean steps in W would scale like |W|^2
// near the anchor and reject perfectly smooth tracks for larger |n|.
double chord(Cx a, Cx b) {
    return std::abs(a - b) /
           std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

// Nearest-root matching with the ambiguity guard. The fork at the collision
// (two branches equidistant from the anchor) is exempt when the two nearest
// candidates form a conjugate or near-real pair: either choice names the
// same branch set.
size_t match_root(const std::vector<Cx>& roots, Cx prev, double jump_bound,
                  double alpha) {
    size_t best = 0, second = 0;
    double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
    for (size_t i = 0; i < roots.size(); ++i) {
        double d = chord(roots[i], prev);
        if (d < d1) {
            d2 = d1;
            second = best;
            d1 = d;
            best = i;
        } else if (d < d2) {
            d2 = d;
            second = i;
        }
    }
    if (roots.size() == 1) return best;
    if (d1 > jump_bound) {
        std::ostringstream os;
        os << "track_branches: branch jump " << d1 << " exceeds bound at alpha="
           << alpha << "; refine the grid";
        throw TrackingError(os.str());
    }
    if (d2 > jump_bound) return best;
    // Fork exemption. Near the collision angle the two nearest candidates
    // are a conjugate pair (hyperbolic side) or a freshly split real pair
    // (spherical side); either choice names the same branch set, and the
    // roots' own rounding error grows as the pair tightens, so the test is
    // relative to the pair separation.
    double sep = std::abs(roots[best] - roots[second]);
    double tol = 1e-5 * (1.0 + std::abs(roots[best])) + 0.05 * sep;
    if (std::abs(roots[best] - std::conj(roots[second])) <= tol) return best;
    if (std::abs(roots[best].imag()) <= tol &&
        std::abs(roots[second].imag()) <= tol)
        return best;
    // Toward the cusp the root cluster is self-similar (all W -> 0 at rates
    // proportional to alpha), so the step-to-spacing ratio approaches a
    // constant near 4 instead of improving with refinement; a 2x margin
    // still cleanly separates resolved tracking from a genuine midpoint
    // ambiguity (ratio ~ 1).
    if (d2 > 2.0 * d1) return best;
    std::ostringstream os;
    os << "track_branches: ambiguous root matching at alpha=" << alpha
       << " (distances " << d1 << ", " << d2 << "); refine the grid";
    throw TrackingError(os.str());
}

// Joint continuation for the spherical pair: the ordered pair of distinct
// roots minimizing the total chordal step. Matching the branches one at a
// time can steal the partner's root when the two tracks pass close to each
// other; the joint cost keeps both sequences continuous.
std::pair<size_t, size_t> match_pair(const std::vector<Cx>& roots, Cx p1,
                                     Cx p2, double jump_bound, double alpha) {
    if (roots.empty())
        throw TrackingError("track_branches: no roots to continue through");
    if (roots.size() == 1) return {0, 0};
    size_t b1 = 0, b2 = 1;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = 0; j < roots.size(); ++j) {
            if (i == j) continue;
            double c = chord(roots[i], p1) + chord(roots[j], p2);
            if (c < best) {
                best = c;
                b1 = i;
                b2 = j;
            }
        }
    double s1 = chord(roots[b1], p1), s2 = chord(roots[b2], p2);
    if (s1 > jump_bound || s2 > jump_bound) {
        std::ostringstream os;
        os << "track_branches: branch jump " << std::max(s1, s2)
           << " exceeds bound at alpha=" << alpha << "; refine the grid";
        throw TrackingError(os.str());
    }
    return {b1, b2};
}

}  // namespace

UniPolyC specialize(long n, ConeAngle a) {
    const SBasis& sb = sbasis(n);
    double sh = std::sin(a.alpha / 2.0);
    double s = -sh * sh;
    UniPolyC out(sb.coeff.size());
    for (size_t i = 0; i < sb.coeff.size(); ++i) {
        const auto& row = sb.coeff[i];
        double v = 0.0;
        for (size_t m = row.size(); m-- > 0;) v = v * s + row[m];
        out[i] = Cx(v, 0.0);
    }
    return out;
}

const std::vector<BigInt>& pdist_discriminant_b(long n) {
    static std::map<long, std::vector<BigInt>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    UniPolyQ d = discriminant(pdist_recursive(n).poly, 0);
    std::vector<BigInt> prim = d.primitive_integer();
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(n, std::move(prim)).first->second;
}

Alpha0Result find_alpha0(long n, const GeomConfig& cfg) {
    if (!TwistKnot{n}.hyperbolic())
        throw NonHyperbolicError("find_alpha0: twist knot T_" +
                                 std::to_string(2 * n) + " is not hyperbolic");
    if (is_default_config(cfg)) {
        static std::map<long, Alpha0Result> cache;
        static std::mutex m;
        {
            std::lock_guard<std::mutex> lock(m);
            auto it = cache.find(n);
            if (it != cache.end()) return it->second;
        }
        Alpha0Result r = find_alpha0_impl(n, cfg);
        std::lock_guard<std::mutex> lock(m);
        return cache.emplace(n, std::move(r)).first->second;
    }
    return find_alpha0_impl(n, cfg);
}

BranchTrack track_branches(long n, double alpha_lo, long intervals_h,
                           long intervals_s, const GeomConfig& cfg) {
    if (!TwistKnot{n}.hyperbolic())
        throw NonHyperbolicError("track_branches: twist knot T_" +
                                 std::to_string(2 * n) + " is not hyperbolic");
    if (intervals_h < 1 || intervals_s < 1)
        throw std::invalid_argument("track_branches: interval counts must be >= 1");
    Alpha0Result a0 = find_alpha0(n, cfg);
    if (!(alpha_lo >= 0.0) || alpha_lo >= a0.alpha0) {
        std::ostringstream os;
        os << "track_branches: alpha_lo = " << alpha_lo
           << " is outside the hyperbolic range [0, " << a0.alpha0 << ")";
        throw NonHyperbolicError(os.str());
    }

    BranchTrack t;
    t.n = n;
    t.alpha0 = a0.alpha0;
    t.alpha_lo = alpha_lo;

    t.grid_h.resize(static_cast<size_t>(intervals_h) + 1);
    for (long j = 0; j <= intervals_h; ++j)
        t.grid_h[static_cast<size_t>(j)] =
            alpha_lo + (a0.alpha0 - alpha_lo) * double(j) / double(intervals_h);
    t.grid_h.back() = a0.alpha0;
    t.W.assign(t.grid_h.size(), Cx(0.0, 0.0));
    t.W.back() = 1.0 / Cx(a0.V_star, 0.0);
    // Predictive continuation: match against the linear extrapolation of the
    // last two samples. The prediction error is O(h^2), so the nearest
    // candidate stays well separated from neighboring branches even where the
    // root cluster tightens (toward the cusp all W -> 0 together).
    Cx prev = t.W.back(), prev2 = prev;
    size_t j_min = alpha_lo == 0.0 ? 1 : 0;
    for (size_t j = t.grid_h.size() - 1; j-- > j_min;) {
        UniPolyC c = specialize(n, ConeAngle(t.grid_h[j]));
        std::reverse(c.begin(), c.end());
        std::vector<Cx> w = all_roots(std::move(c));
        Cx pred = prev + (prev - prev2);
        Cx pick = w[match_root(w, pred, cfg.jump_bound, t.grid_h[j])];
        Cx v = 1.0 / pick;
        if (v.imag() > 1e-9 * (1.0 + std::abs(v))) pick = std::conj(pick);
        prev2 = prev;
        t.W[j] = prev = pick;
    }

    t.grid_s.resize(static_cast<size_t>(intervals_s) + 1);
    for (long j = 0; j <= intervals_s; ++j)
        t.grid_s[static_cast<size_t>(j)] =
            a0.alpha0 + (M_PI - a0.alpha0) * double(j) / double(intervals_s);
    t.grid_s.back() = M_PI;
    t.V1.assign(t.grid_s.size(), Cx(a0.V_star, 0.0));
    t.V2 = t.V1;
    Cx p1 = t.V1[0], p2 = t.V2[0], q1 = p1, q2 = p2;
    for (size_t j = 1; j < t.grid_s.size(); ++j) {
        std::vector<Cx> r = all_roots(specialize(n, ConeAngle(t.grid_s[j])));
        auto [i1, i2] = match_pair(r, p1 + (p1 - q1), p2 + (p2 - q2),
                                   cfg.jump_bound, t.grid_s[j]);
        q1 = p1;
        q2 = p2;
        t.V1[j] = p1 = r[i1];
        t.V2[j] = p2 = r[i2];
    }
    return t;
}

BranchTrack track_branches(long n, double alpha_lo, long grid_size,
                           const GeomConfig& cfg) {
    return track_branches(n, alpha_lo, grid_size, grid_size, cfg);
}

double principal_arg_w(double alpha, Cx w) {
    double A = 1.0 / std::tan(alpha / 2.0);
    Cx num = A * w + Cx(0.0, 1.0);
    Cx den = A * w - Cx(0.0, 1.0);
    if (den == Cx(0.0, 0.0))
        throw GeometricError("integrand: singular configuration A = iV");
    return std::arg(std::polar(1.0, -alpha) * num / den);
}

double principal_arg_v(double alpha, Cx v) {
    double A = 1.0 / std::tan(alpha / 2.0);
    Cx num = A + Cx(0.0, 1.0) * v;
    Cx den = A - Cx(0.0, 1.0) * v;
    if (den == Cx(0.0, 0.0))
        throw GeometricError("integrand: singular configuration A = iV");
    return std::arg(std::polar(1.0, -alpha) * num / den);
}

double PhaseState::step(double raw_principal) {
    if (!started) {
        started = true;
        prev = raw_principal;
        return raw_principal;
    }
    double k = std::floor((prev - raw_principal) / (2.0 * M_PI) + 0.5);
    double u = raw_principal + 2.0 * M_PI * k;
    if (std::abs(u - prev) > M_PI / 2.0)
        throw TrackingError("phase step exceeds pi/2; refine the grid");
    prev = u;
    return u;
}

double integrand_hyperbolic(ConeAngle a, Cx w, PhaseState& ps) {
    return 2.0 * ps.step(principal_arg_w(a.alpha, w));
}

double integrand_spherical(ConeAngle a, Cx v1, Cx v2, PhaseState& p1,
                           PhaseState& p2) {
    return p1.step(principal_arg_v(a.alpha, v1)) +
           p2.step(principal_arg_v(a.alpha, v2));
}

}  // namespace twistcs
