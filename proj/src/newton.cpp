#include "twistcs/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace twistcs {

namespace {

using Pt = std::pair<long, long>;

long long cross(const Pt& o, const Pt& a, const Pt& b) {
    return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long long>(a.second - o.second) * (b.first - o.first);
}

// Andrew's monotone chain; returns hull vertices counterclockwise starting
// from the lexicographically least point. Collinear points are dropped.
std::vector<Pt> hull_vertices(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) return pts;
    auto build = [](const std::vector<Pt>& ps) {
        std::vector<Pt> h;
        for (const auto& p : ps) {
            while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0)
                h.pop_back();
            h.push_back(p);
        }
        return h;
    };
    std::vector<Pt> lower = build(pts);
    std::vector<Pt> upper = build({pts.rbegin(), pts.rend()});
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

Slope edge_slope(const Pt& from, const Pt& to) {
    long dx = to.first - from.first;
    long dy = to.second - from.second;
    if (dx == 0) return Slope{1, 0};
    long g = std::gcd(std::abs(dx), std::abs(dy));
    dx /= g;
    dy /= g;
    if (dx < 0) {
        dx = -dx;
        dy = -dy;
    }
    return Slope{dy, dx};
}

std::vector<Pt> edge_lattice(const Pt& from, const Pt& to) {
    long dx = to.first - from.first;
    long dy = to.second - from.second;
    long g = std::gcd(std::abs(dx), std::abs(dy));
    std::vector<Pt> pts;
    pts.reserve(static_cast<size_t>(g) + 1);
    for (long j = 0; j <= g; ++j)
        pts.emplace_back(from.first + j * (dx / g), from.second + j * (dy / g));
    return pts;
}

// Divide ascending-coefficient c by the monic linear factor (t - r) if the
// remainder vanishes; returns true and replaces c by the quotient on success.
bool divide_linear(std::vector<BigInt>& c, long r) {
    if (c.size() < 2) return false;
    std::vector<BigInt> q(c.size() - 1);
    BigInt carry = 0;
    for (size_t i = c.size(); i-- > 1;) {
        carry = c[i] + r * carry;
        q[i - 1] = carry;
    }
    if (c[0] + r * carry != 0) return false;
    c = std::move(q);
    return true;
}

// Cyclotomic polynomial Phi_d, ascending integer coefficients, memoized.
// Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e, all divisions exact.
const std::vector<BigInt>& cyclotomic(long d) {
    static std::map<long, std::vector<BigInt>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> num(static_cast<size_t>(d) + 1);
    num[0] = -1;
    num[static_cast<size_t>(d)] = 1;
    for (long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        const std::vector<BigInt>& phi = cyclotomic(e);
        // Exact long division num / phi (phi is monic).
        std::vector<BigInt> q(num.size() - phi.size() + 1);
        for (size_t i = q.size(); i-- > 0;) {
            q[i] = num[i + phi.size() - 1];
            for (size_t j = 0; j + 1 < phi.size(); ++j)
                num[i + j] -= q[i] * phi[j];
            num[i + phi.size() - 1] = 0;
        }
        num = std::move(q);
    }
    return cache.emplace(d, std::move(num)).first->second;
}

// True if the monic polynomial `div` exactly divides `c` (both ascending).
bool divides(const std::vector<BigInt>& c, const std::vector<BigInt>& div) {
    if (c.size() < div.size()) return false;
    std::vector<BigInt> rem = c;
    for (size_t i = rem.size() - div.size() + 1; i-- > 0;) {
        BigInt q = rem[i + div.size() - 1];
        for (size_t j = 0; j < div.size(); ++j) rem[i + j] -= q * div[j];
    }
    return std::all_of(rem.begin(), rem.end(),
                       [](const BigInt& x) { return x == 0; });
}

long euler_phi(long d) {
    long result = d;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        result -= result / p;
        while (d % p == 0) d /= p;
    }
    if (d > 1) result -= result / d;
    return result;
}

std::string show_poly(const std::vector<BigInt>& c) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i].get_str();
    os << "]";
    return os.str();
}

}  // namespace

NewtonPolygon newton_polygon(const BiPoly& A) {
    if (A.is_zero())
        throw std::invalid_argument("newton_polygon: zero polynomial");
    std::vector<Pt> support;
    support.reserve(A.terms().size());
    for (const auto& [key, c] : A.terms()) support.push_back(key);
    NewtonPolygon np;
    np.vertices = hull_vertices(std::move(support));
    if (np.vertices.size() >= 2) {
        for (size_t i = 0; i < np.vertices.size(); ++i) {
            const Pt& a = np.vertices[i];
            const Pt& b = np.vertices[(i + 1) % np.vertices.size()];
            np.edges.push_back(
                PolygonEdge{a, b, edge_slope(a, b), edge_lattice(a, b)});
        }
        if (np.vertices.size() == 2) np.edges.resize(2);  // segment: two orientations
    }
    return np;
}

EdgePoly edge_polynomial(const BiPoly& A, const PolygonEdge& edge) {
    NewtonPolygon np = newton_polygon(A);
    bool found = false;
    for (const PolygonEdge& e : np.edges)
        if (e.from == edge.from && e.to == edge.to) {
            found = true;
            break;
        }
    if (!found)
        throw std::invalid_argument(
            "edge_polynomial: edge is not on the Newton polygon");
    Pt corner = std::min(edge.from, edge.to);
    Pt other = std::max(edge.from, edge.to);
    long g = static_cast<long>(edge.lattice_points.size()) - 1;
    long sx = (other.first - corner.first) / g;
    long sy = (other.second - corner.second) / g;
    EdgePoly ep;
    ep.slope = edge.slope;
    ep.coeffs.reserve(static_cast<size_t>(g) + 1);
    for (long j = 0; j <= g; ++j)
        ep.coeffs.push_back(A.coeff(corner.first + j * sx, corner.second + j * sy));
    if (ep.coeffs.front() == 0 || ep.coeffs.back() == 0)
        throw std::logic_error("edge_polynomial: hull corner has zero coefficient");
    return ep;
}

std::optional<PlusMinusOneFactorization> factor_plus_minus_one(const EdgePoly& e) {
    PlusMinusOneFactorization f;
    std::vector<BigInt> c = e.coeffs;
    while (divide_linear(c, 1)) ++f.k;
    while (divide_linear(c, -1)) ++f.l;
    if (c.size() != 1) return std::nullopt;
    f.unit = c[0];
    return f;
}

long boundary_component_count(const EdgePoly& e) {
    long deg = e.degree();
    long count = 1;
    for (long d = 1; euler_phi(d) <= deg; ++d)
        if (divides(e.coeffs, cyclotomic(d))) count = std::lcm(count, d);
    return count;
}

EdgeTheoremReport verify_edge_theorem(long n) {
    if (n == 0)
        throw std::invalid_argument("verify_edge_theorem: n must be nonzero");
    EdgeTheoremReport report;
    report.n = n;

    const BiPoly& A = apoly_recursive(n).poly;
    NewtonPolygon np = newton_polygon(A);

    // Expected nonzero nonvertical slopes and the (t-1)/(t+1) multiplicities
    // with sign constraint: 0 = either sign, +1 / -1 = that exact unit.
    struct Expected {
        long k, l;
        int sign;
    };
    std::map<std::pair<long, long>, Expected> expect;
    if (n > 0) {
        expect[{-4 * n, 1}] = Expected{1, 0, 0};
        expect[{4, 1}] = Expected{n, 0, n % 2 == 0 ? -1 : 0};
    } else {
        expect[{-4 * n + 2, 1}] = Expected{0, 1, +1};
        if (-n - 1 >= 1)
            expect[{4, 1}] = Expected{-n - 1, 0, n % 2 == 0 ? 0 : +1};
    }

    std::map<std::pair<long, long>, bool> seen;
    for (const PolygonEdge& edge : np.edges) {
        if (edge.slope.vertical() || edge.slope.dm == 0) continue;
        std::pair<long, long> key{edge.slope.dm, edge.slope.dl};
        EdgePoly ep = edge_polynomial(A, edge);
        report.checked.emplace_back(edge.slope, ep);
        auto it = expect.find(key);
        if (it == expect.end()) {
            report.failures.push_back("unexpected nonzero slope " +
                                      edge.slope.str() + " on the hull");
            continue;
        }
        seen[key] = true;
        const Expected& want = it->second;
        auto fac = factor_plus_minus_one(ep);
        std::string where = "slope " + edge.slope.str() + " edge poly " +
                            show_poly(ep.coeffs);
        if (!fac) {
            report.failures.push_back(where +
                                      " is not +-(t-1)^k (t+1)^l");
            continue;
        }
        if (fac->k != want.k || fac->l != want.l)
            report.failures.push_back(
                where + ": multiplicities (t-1)^" + std::to_string(fac->k) +
                "(t+1)^" + std::to_string(fac->l) + ", expected (t-1)^" +
                std::to_string(want.k) + "(t+1)^" + std::to_string(want.l));
        if (fac->unit != 1 && fac->unit != -1)
            report.failures.push_back(where + ": non-unit constant " +
                                      fac->unit.get_str());
        else if (want.sign != 0 && fac->unit != want.sign)
            report.failures.push_back(where + ": sign " + fac->unit.get_str() +
                                      ", expected " + std::to_string(want.sign));
    }
    for (const auto& [key, want] : expect)
        if (!seen.count(key))
            report.failures.push_back("expected slope " +
                                      Slope{key.first, key.second}.str() +
                                      " not found on the hull");
    for (const auto& [key, was] : seen) {
        Slope s{key.first, key.second};
        bool dup = false;
        for (const Slope& r : report.nonzero_slopes) dup = dup || r == s;
        if (!dup) report.nonzero_slopes.push_back(s);
    }
    report.pass = report.failures.empty();
    return report;
}

}  // namespace twistcs
