#include "twistcs/chernsimons.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <tuple>

namespace twistcs {

namespace {

void check_quad(const QuadratureSpec& q) {
    if (q.intervals_h < 2 || q.intervals_h % 2 != 0 || q.intervals_s < 2 ||
        q.intervals_s % 2 != 0)
        throw std::invalid_argument(
            "quadrature: interval counts must be even and >= 2");
}

// Raw (unreduced) invariant for lower cone angle alpha_lo. alpha_lo == 0
// means the cusped knot itself. Memoized: the cyclic cover reuses the
// orbifold's value and table sweeps revisit (n, k) pairs.
double cs_raw(long n, double alpha_lo, const QuadratureSpec& q,
              const GeomConfig& cfg) {
    using Key = std::tuple<long, unsigned long long, long, long>;
    static std::map<Key, double> cache;
    static std::mutex m;
    const bool cacheable =
        cfg.collision_eps == GeomConfig{}.collision_eps &&
        cfg.jump_bound == GeomConfig{}.jump_bound;
    Key key{n, std::bit_cast<unsigned long long>(alpha_lo), q.intervals_h,
            q.intervals_s};
    if (cacheable) {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    double raw = cs_samples(n, alpha_lo, q, cfg).raw;
    if (cacheable) {
        std::lock_guard<std::mutex> lock(m);
        cache.emplace(key, raw);
    }
    return raw;
}

}  // namespace

CsSamples cs_samples(long n, double alpha_lo, const QuadratureSpec& q,
                     const GeomConfig& cfg) {
    check_quad(q);
    CsSamples s;
    s.track = track_branches(n, alpha_lo, q.intervals_h, q.intervals_s, cfg);
    const BranchTrack& t = s.track;
    const bool cusp = alpha_lo == 0.0;

    // Hyperbolic side: anchor the phase at alpha0 (where V is real, so the
    // principal value is exact) and unwrap downward toward alpha_lo. At the
    // cusp endpoint the specialized polynomial degenerates; the integrand's
    // continuous limit along this branch is 2*pi.
    s.fh.assign(t.grid_h.size(), 0.0);
    {
        PhaseState ph;
        size_t j_min = cusp ? 1 : 0;
        for (size_t j = t.grid_h.size(); j-- > j_min;)
            s.fh[j] = integrand_hyperbolic(ConeAngle(t.grid_h[j]), t.W[j], ph);
        if (cusp) s.fh[0] = cusp_endpoint_integrand();
    }

    // Spherical side: anchor at alpha0 and unwrap upward toward pi.
    s.fs.assign(t.grid_s.size(), 0.0);
    {
        PhaseState p1, p2;
        for (size_t j = 0; j < t.grid_s.size(); ++j)
            s.fs[j] = integrand_spherical(ConeAngle(t.grid_s[j]), t.V1[j],
                                          t.V2[j], p1, p2);
    }

    double ih = simpson(s.fh, alpha_lo, t.alpha0);
    double is = simpson(s.fs, t.alpha0, M_PI);
    s.raw = 0.5 * lens_cs(n).get_d() + (ih + is) / (4.0 * M_PI * M_PI);
    return s;
}

BigRat lens_cs(long n) {
    BigRat r(BigInt(6 * n + 4), BigInt(8 * n + 2));
    r.canonicalize();
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    r -= BigRat(q);
    return r;
}

double simpson(const std::vector<double>& f, double a, double b) {
    if (f.size() < 3 || f.size() % 2 == 0)
        throw std::invalid_argument(
            "simpson: need an even number of subintervals (odd sample count >= 3)");
    if (!(a < b)) throw std::invalid_argument("simpson: need a < b");
    size_t n = f.size() - 1;
    double sum = f.front() + f.back();
    for (size_t j = 1; j < n; ++j) sum += (j % 2 == 1 ? 4.0 : 2.0) * f[j];
    double h = (b - a) / static_cast<double>(n);
    return sum * h / 3.0;
}

double reduce_mod(double x, const BigRat& modulus) {
    double m = modulus.get_d();
    if (!(m > 0.0)) throw std::invalid_argument("reduce_mod: modulus must be positive");
    double r = x - m * std::floor(x / m);
    if (r >= m) r -= m;
    if (r < 0.0) r += m;
    if (m - r < 1e-12) r = 0.0;
    return r;
}

CsValue cs_orbifold(long n, long k, const QuadratureSpec& quad,
                    const GeomConfig& cfg) {
    if (k <= 0) throw std::invalid_argument("cs_orbifold: k must be positive");
    check_quad(quad);
    if (!TwistKnot{n}.hyperbolic())
        throw NonHyperbolicError("cs_orbifold: twist knot T_" +
                                 std::to_string(2 * n) + " is not hyperbolic");
    double alpha_lo = 2.0 * M_PI / static_cast<double>(k);
    Alpha0Result a0 = find_alpha0(n, cfg);
    if (alpha_lo >= a0.alpha0)
        throw NonHyperbolicError(
            "cs_orbifold: cone angle 2*pi/" + std::to_string(k) +
            " is not below the Euclidean angle alpha0");
    double raw = cs_raw(n, alpha_lo, quad, cfg);
    BigRat mod = k % 2 == 0 ? BigRat(1, k) : BigRat(1, 2 * k);
    mod.canonicalize();
    return {raw, mod, reduce_mod(raw, mod)};
}

CsValue cs_cyclic_cover(long n, long k, const QuadratureSpec& quad,
                        const GeomConfig& cfg) {
    CsValue orb = cs_orbifold(n, k, quad, cfg);
    double raw = static_cast<double>(k) * orb.raw;
    BigRat mod = k % 2 == 0 ? BigRat(1) : BigRat(1, 2);
    return {raw, mod, reduce_mod(raw, mod)};
}

CsValue cs_knot(long n, const QuadratureSpec& quad, const GeomConfig& cfg) {
    check_quad(quad);
    if (!TwistKnot{n}.hyperbolic())
        throw NonHyperbolicError("cs_knot: twist knot T_" +
                                 std::to_string(2 * n) + " is not hyperbolic");
    double raw = cs_raw(n, 0.0, quad, cfg);
    BigRat mod(1, 2);
    return {raw, mod, reduce_mod(raw, mod)};
}

}  // namespace twistcs
