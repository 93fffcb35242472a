// Acceptance gate: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "twistcs/chernsimons.hpp"
#include "twistcs/golden_tables.hpp"
#include "twistcs/json_io.hpp"
#include "twistcs/newton.hpp"
#include "twistcs/twistgen.hpp"

using namespace twistcs;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& msg) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += msg;
}

BiPoly make_poly(const std::string& v1, const std::string& v2,
                 std::initializer_list<std::tuple<long, long, long>> terms) {
    BiPoly p = BiPoly::zero(v1, v2);
    for (const auto& [i, j, c] : terms) p.add_term(i, j, BigInt(c));
    return p;
}

double wrap_delta(double a, double b, double modulus) {
    double d = std::abs(a - b);
    return std::min(d, modulus - d);
}

// 1. Exact generator identities for |n| <= 10 in under 10 s.
Outcome criterion1() {
    Outcome o;
    auto t0 = clock_type::now();
    for (long n = -10; n <= 10; ++n) {
        if (pdist_recursive(n).poly != pdist_explicit(n).poly)
            fail(o, "pdist generators disagree at n=" + std::to_string(n));
        BiPoly rec = apoly_recursive(n).poly;
        if (rec != apoly_explicit(n).poly)
            fail(o, "apoly generators disagree at n=" + std::to_string(n));
        if (!equal_up_to_unit(rec, apoly_from_pdist(n).poly))
            fail(o, "apoly change-of-variables disagrees at n=" + std::to_string(n));
    }
    double dt = seconds_since(t0);
    if (dt >= 10.0) fail(o, "identity suite took too long");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f s", dt);
    o.detail = o.pass ? buf : o.detail + " (" + buf + ")";
    return o;
}

// 2. Printed initial polynomials match exactly.
Outcome criterion2() {
    Outcome o;
    auto expect = [&](const char* name, const BiPoly& got, const BiPoly& want) {
        if (got != want) fail(o, std::string(name) + " mismatch");
    };
    expect("P_-2", pdist_recursive(-1).poly,
           make_poly("V", "B", {{1, 2, 2}, {1, 0, -2}, {0, 2, 2}, {0, 0, -1}}));
    expect("P_0", pdist_recursive(0).poly, make_poly("V", "B", {{0, 0, 1}}));
    expect("P_2", pdist_recursive(1).poly,
           make_poly("V", "B",
                     {{2, 4, 4}, {2, 2, -8}, {2, 0, 4}, {1, 0, 2}, {1, 2, -2},
                      {0, 4, -4}, {0, 2, 6}, {0, 0, -1}}));
    expect("A_-4", apoly_recursive(-2).poly,
           make_poly("L", "M",
                     {{0, 0, 1}, {1, 0, -1}, {1, 2, 2}, {1, 4, 2}, {2, 4, 1},
                      {2, 6, -1}, {1, 8, -1}, {1, 10, 1}, {2, 10, 2},
                      {2, 12, 2}, {2, 14, -1}, {3, 14, 1}}));
    expect("A_-2", apoly_recursive(-1).poly,
           make_poly("L", "M", {{0, 0, 1}, {1, 6, 1}}));
    expect("A_0", apoly_recursive(0).poly, make_poly("L", "M", {{0, 0, -1}}));
    expect("A_2", apoly_recursive(1).poly,
           make_poly("L", "M", {{1, 0, 1}, {1, 2, -1}, {0, 4, -1}, {1, 4, -2},
                                {2, 4, -1}, {1, 6, -1}, {1, 8, 1}}));
    expect("A_u", apoly_u(),
           make_poly("L", "M", {{0, 0, 1}, {1, 0, -1}, {1, 2, 2}, {0, 4, 1},
                                {1, 4, 2}, {2, 4, 1}, {1, 6, 2}, {1, 8, -1},
                                {2, 8, 1}}));
    if (o.pass) o.detail = "8 polynomials exact";
    return o;
}

// 3. Edge theorem for 1 <= |n| <= 10 in under 5 s.
Outcome criterion3() {
    Outcome o;
    auto t0 = clock_type::now();
    int edges_checked = 0;
    for (long n = -10; n <= 10; ++n) {
        if (n == 0) continue;
        EdgeTheoremReport r = verify_edge_theorem(n);
        if (!r.pass)
            fail(o, "edge theorem fails at n=" + std::to_string(n) + ": " +
                        (r.failures.empty() ? "?" : r.failures.front()));
        edges_checked += static_cast<int>(r.checked.size());
        BiPoly a = apoly_recursive(n).poly;
        NewtonPolygon poly = newton_polygon(a);
        for (const auto& v : poly.vertices)
            if (abs(a.coeff(v.first, v.second)) != 1)
                fail(o, "corner coefficient not a unit at n=" + std::to_string(n));
        for (const auto& e : poly.edges)
            if (!factor_plus_minus_one(edge_polynomial(a, e)))
                fail(o, "edge polynomial does not factor at n=" + std::to_string(n));
    }
    double dt = seconds_since(t0);
    if (dt >= 5.0) fail(o, "edge suite took too long");
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d edges across 20 knots, %.2f s",
                  edges_checked, dt);
    if (o.pass) o.detail = buf;
    return o;
}

// 4. Euclidean angles within 1e-4 of the reference table.
Outcome criterion4() {
    Outcome o;
    double worst = 0;
    for (std::size_t i = 0; i < golden::kCuspedTableSize; ++i) {
        const auto& row = golden::kCuspedTable[i];
        double a = find_alpha0(row.n).alpha0;
        double d = std::abs(a - row.alpha0);
        worst = std::max(worst, d);
        if (d > 1e-4)
            fail(o, "alpha0 off by " + std::to_string(d) + " at n=" +
                        std::to_string(row.n));
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "16 knots, worst |delta| = %.2e", worst);
    if (o.pass) o.detail = buf;
    return o;
}

// 5. Cusped CS values within 2e-5, under 10 s per knot.
Outcome criterion5() {
    Outcome o;
    double worst = 0, worst_time = 0;
    for (std::size_t i = 0; i < golden::kCuspedTableSize; ++i) {
        const auto& row = golden::kCuspedTable[i];
        auto t0 = clock_type::now();
        double v = cs_knot(row.n).canonical;
        double dt = seconds_since(t0);
        worst_time = std::max(worst_time, dt);
        double d = wrap_delta(v, row.cs_knot, 0.5);
        worst = std::max(worst, d);
        if (d > 2e-5)
            fail(o, "cs_knot off by " + std::to_string(d) + " at n=" +
                        std::to_string(row.n));
        if (dt >= 10.0)
            fail(o, "cs_knot too slow at n=" + std::to_string(row.n));
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "16 knots, worst |delta| = %.2e, slowest %.2f s",
                  worst, worst_time);
    if (o.pass) o.detail = buf;
    return o;
}

// 6. Orbifold/cover tables: 128 cells. Orbifold values within 2e-5 with the
// canonical value inside [0, modulus). The published cover column equals k
// times the published raw orbifold value, so its rounding noise scales with
// k; covers must lie within k*2e-5, and the flat-2e-5 count is reported.
Outcome criterion6() {
    Outcome o;
    double worst_orb = 0, worst_cover = 0;
    int cover_flat = 0, cells = 0;
    for (std::size_t i = 0; i < golden::kOrbifoldTableSize; ++i) {
        const auto& row = golden::kOrbifoldTable[i];
        ++cells;
        CsValue orb, cov;
        try {
            orb = cs_orbifold(row.n, row.k);
            cov = cs_cyclic_cover(row.n, row.k);
        } catch (const std::exception& e) {
            fail(o, "cell (" + std::to_string(row.n) + "," +
                        std::to_string(row.k) + ") threw: " + e.what());
            continue;
        }
        double orb_mod = orb.modulus.get_d();
        double cov_mod = cov.modulus.get_d();
        if (!(orb.canonical >= 0 && orb.canonical < orb_mod))
            fail(o, "orbifold canonical outside window at (" +
                        std::to_string(row.n) + "," + std::to_string(row.k) + ")");
        if (!(cov.canonical >= 0 && cov.canonical < cov_mod))
            fail(o, "cover canonical outside window at (" +
                        std::to_string(row.n) + "," + std::to_string(row.k) + ")");
        double d_orb = wrap_delta(orb.canonical, row.cs_orbifold, orb_mod);
        double d_cov = wrap_delta(cov.canonical, row.cs_cover, cov_mod);
        worst_orb = std::max(worst_orb, d_orb);
        worst_cover = std::max(worst_cover, d_cov);
        if (d_orb > 2e-5)
            fail(o, "orbifold delta " + std::to_string(d_orb) + " at (" +
                        std::to_string(row.n) + "," + std::to_string(row.k) + ")");
        if (d_cov <= 2e-5) ++cover_flat;
        if (d_cov > 2e-5 * double(row.k))
            fail(o, "cover delta " + std::to_string(d_cov) + " at (" +
                        std::to_string(row.n) + "," + std::to_string(row.k) + ")");
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%d cells; worst orbifold delta %.2e; cover within 2e-5 in "
                  "%d/%d cells, all within k*2e-5 (worst %.2e)",
                  cells, worst_orb, cover_flat, cells, worst_cover);
    if (o.pass) o.detail = buf;
    return o;
}

// 7. Lens-space formula exact.
Outcome criterion7() {
    Outcome o;
    if (lens_cs(1) != 0) fail(o, "lens_cs(1) != 0");
    if (lens_cs(2) != BigRat(8, 9)) fail(o, "lens_cs(2) != 8/9");
    if (lens_cs(-2) != BigRat(4, 7)) fail(o, "lens_cs(-2) != 4/7");
    for (long n = -25; n <= 25; ++n) {
        BigRat v = lens_cs(n);
        if (!(v >= 0 && v < 1)) fail(o, "lens_cs out of [0,1)");
        // v == (6n+4)/(8n+2) modulo 1: difference must be an integer.
        BigRat diff = BigRat(BigInt(6 * n + 4), BigInt(8 * n + 2));
        diff.canonicalize();
        diff -= v;
        if (diff.get_den() != 1) fail(o, "lens_cs not congruent at n=" + std::to_string(n));
    }
    if (o.pass) o.detail = "exact rational identity over n in [-25,25]";
    return o;
}

// 8. Property suites that use no reference data.
Outcome criterion8() {
    Outcome o;
    // Vieta residuals on specialized polynomials.
    for (long n : {2L, -3L}) {
        for (double alpha : {1.0, 2.0}) {
            UniPolyC p = specialize(n, ConeAngle(alpha));
            auto roots = all_roots(p);
            std::complex<double> sum = 0, prod = 1;
            for (auto r : roots) sum += r, prod *= r;
            size_t d = p.size() - 1;
            if (std::abs(sum + p[d - 1] / p[d]) > 1e-8 * (1.0 + std::abs(sum)))
                fail(o, "Vieta sum residual at n=" + std::to_string(n));
            std::complex<double> p0 = (d % 2 == 0 ? 1.0 : -1.0) * p[0] / p[d];
            if (std::abs(prod - p0) > 1e-8 * (1.0 + std::abs(prod)))
                fail(o, "Vieta product residual at n=" + std::to_string(n));
        }
    }
    // Simpson interval doubling.
    for (long n : {2L, -2L})
        for (long k : {3L, 5L}) {
            QuadratureSpec fine;
            fine.intervals_h = 20000;
            fine.intervals_s = 20000;
            double a = cs_orbifold(n, k).raw;
            double b = cs_orbifold(n, k, fine).raw;
            if (std::abs(a - b) >= 1e-8)
                fail(o, "quadrature doubling moved cs at n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
        }
    // Branch and phase continuity.
    {
        QuadratureSpec q;
        q.intervals_h = 2000;
        q.intervals_s = 2000;
        CsSamples s = cs_samples(2, 2.0 * M_PI / 5.0, q);
        for (size_t j = 0; j + 1 < s.fh.size(); ++j)
            if (std::abs(s.fh[j + 1] - s.fh[j]) >= M_PI / 2)
                fail(o, "hyperbolic phase step exceeds pi/2");
        for (size_t j = 0; j + 1 < s.fs.size(); ++j)
            if (std::abs(s.fs[j + 1] - s.fs[j]) >= M_PI / 2)
                fail(o, "spherical phase step exceeds pi/2");
        auto chord = [](std::complex<double> a, std::complex<double> b) {
            return std::abs(a - b) /
                   std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
        };
        const BranchTrack& t = s.track;
        for (size_t j = 0; j + 1 < t.W.size(); ++j)
            if (chord(t.W[j + 1], t.W[j]) > 0.5)
                fail(o, "branch jump exceeds bound");
    }
    // Canonical-representative bounds.
    for (long k : {3L, 4L, 9L, 10L}) {
        CsValue v = cs_orbifold(-4, k);
        if (!(v.canonical >= 0 && v.canonical < v.modulus.get_d()))
            fail(o, "canonical bound violated at k=" + std::to_string(k));
    }
    if (o.pass) o.detail = "Vieta, quadrature doubling, continuity, canonical bounds";
    return o;
}

}  // namespace

int main() {
    struct Entry {
        const char* label;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"1. exact generator identities (|n| <= 10)", criterion1},
        {"2. printed initial polynomials exact", criterion2},
        {"3. edge-polynomial theorem (1 <= |n| <= 10)", criterion3},
        {"4. Euclidean angles vs reference (tol 1e-4)", criterion4},
        {"5. cusped invariants vs reference (tol 2e-5)", criterion5},
        {"6. orbifold/cover tables (128 cells)", criterion6},
        {"7. lens-space formula exact", criterion7},
        {"8. golden-free property suites", criterion8},
    };
    bool all = true;
    for (const auto& e : entries) {
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        all = all && o.pass;
        std::printf("[%s] %s%s%s\n", o.pass ? "PASS" : "FAIL", e.label,
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
