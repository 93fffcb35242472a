#include "doctest.h"
#include "test_util.hpp"
#include "twistcs/twistgen.hpp"
#include "twistcs/unipoly.hpp"

#include <random>

using namespace twistcs;
using testutil::make_poly;

namespace {

UniPolyQ rational_poly(std::initializer_list<long> coeffs) {
    UniPolyQ p;
    for (long c : coeffs) p.c.emplace_back(c);
    p.trim();
    return p;
}

BigInt ipow(long base, long e) {
    BigInt b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

TEST_CASE("UniPolyQ basics") {
    UniPolyQ p = rational_poly({-1, 0, 1});  // x^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(BigRat(2)) == BigRat(3));
    CHECK(p.eval(BigRat(1)) == 0);
    UniPolyQ z = rational_poly({0, 0});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
}

TEST_CASE("primitive_integer clears denominators and content") {
    UniPolyQ p;
    p.c = {BigRat(3, 2), BigRat(0), BigRat(-9, 4)};
    std::vector<BigInt> prim = p.primitive_integer();
    REQUIRE(prim.size() == 3);
    CHECK(prim[0] == 2);
    CHECK(prim[1] == 0);
    CHECK(prim[2] == -3);
}

TEST_CASE("resultant pinned examples") {
    // res_V(V - 1, V^2 - B) = 1 - B
    BiPoly p = make_poly("V", "B", {{1, 0, 1}, {0, 0, -1}});
    BiPoly q = make_poly("V", "B", {{2, 0, 1}, {0, 1, -1}});
    UniPolyQ r = resultant(p, q, 0);
    CHECK(r == rational_poly({1, -1}));

    // res_V(V^2, V + B) = B^2
    BiPoly p2 = make_poly("V", "B", {{2, 0, 1}});
    BiPoly q2 = make_poly("V", "B", {{1, 0, 1}, {0, 1, 1}});
    CHECK(resultant(p2, q2, 0) == rational_poly({0, 0, 1}));
}

TEST_CASE("resultant swap symmetry") {
    BiPoly p = make_poly("V", "B", {{2, 1, 3}, {1, 0, -1}, {0, 0, 2}});
    BiPoly q = make_poly("V", "B", {{3, 0, 1}, {0, 2, 5}});
    UniPolyQ rpq = resultant(p, q, 0);
    UniPolyQ rqp = resultant(q, p, 0);
    // res(p,q) = (-1)^(deg p * deg q) res(q,p); here 2*3 even.
    CHECK(rpq == rqp);

    BiPoly p1 = make_poly("V", "B", {{1, 0, 1}, {0, 1, 1}});
    BiPoly q3 = make_poly("V", "B", {{3, 0, 2}, {0, 0, 1}});
    UniPolyQ a = resultant(p1, q3, 0);
    UniPolyQ b = resultant(q3, p1, 0);
    // deg 1 * deg 3 odd: antisymmetric.
    for (size_t i = 0; i < std::max(a.c.size(), b.c.size()); ++i) {
        BigRat av = i < a.c.size() ? a.c[i] : BigRat(0);
        BigRat bv = i < b.c.size() ? b.c[i] : BigRat(0);
        CHECK(av == -bv);
    }
}

TEST_CASE("resultant vanishes exactly on a common factor") {
    // p = (V - 1)(V - B), q = (V - 1)(V + B) share the factor V - 1.
    BiPoly vm1 = make_poly("V", "B", {{1, 0, 1}, {0, 0, -1}});
    BiPoly vmB = make_poly("V", "B", {{1, 0, 1}, {0, 1, -1}});
    BiPoly vpB = make_poly("V", "B", {{1, 0, 1}, {0, 1, 1}});
    CHECK(resultant(vm1 * vmB, vm1 * vpB, 0).is_zero());
    // Without the common factor the resultant is nonzero.
    CHECK_FALSE(resultant(vmB, vpB, 0).is_zero());
}

TEST_CASE("modular resultant agrees with exact Sylvester determinant") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(1, 5);
    for (int iter = 0; iter < 12; ++iter) {
        int dp = deg(rng), dq = deg(rng);
        std::vector<BigInt> pc(dp + 1), qc(dq + 1);
        BiPoly p = BiPoly::zero("V", "B"), q = BiPoly::zero("V", "B");
        for (int i = 0; i <= dp; ++i) {
            int c = i == dp ? (coeff(rng) / 2) * 2 + 1 : coeff(rng);  // lc != 0
            pc[i] = c;
            if (c != 0) p.add_term(i, 0, BigInt(c));
        }
        for (int i = 0; i <= dq; ++i) {
            int c = i == dq ? (coeff(rng) / 2) * 2 + 1 : coeff(rng);
            qc[i] = c;
            if (c != 0) q.add_term(i, 0, BigInt(c));
        }
        UniPolyQ r = resultant(p, q, 0);
        BigInt expect = sylvester_resultant_exact(pc, qc);
        REQUIRE(r.degree() <= 0);
        BigRat got = r.c.empty() ? BigRat(0) : r.c[0];
        CHECK(got == BigRat(expect));
    }
}

TEST_CASE("bivariate resultant matches specialization at sample points") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int iter = 0; iter < 6; ++iter) {
        BiPoly p = BiPoly::zero("V", "B"), q = BiPoly::zero("V", "B");
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) {
                int c = coeff(rng);
                if (c != 0) p.add_term(i, j, BigInt(c));
                c = coeff(rng);
                if (c != 0) q.add_term(i, j, BigInt(c));
            }
        if (p.degree(0) < 1 || q.degree(0) < 1) continue;
        UniPolyQ r = resultant(p, q, 0);
        for (long beta = -3; beta <= 3; ++beta) {
            // Specialize B = beta; skip if a leading coefficient vanishes
            // (the Sylvester matrix would change shape).
            std::vector<BigInt> pc(p.degree(0) + 1, BigInt(0));
            std::vector<BigInt> qc(q.degree(0) + 1, BigInt(0));
            for (const auto& [key, c] : p.terms())
                pc[key.first] += c * ipow(beta, key.second);
            for (const auto& [key, c] : q.terms())
                qc[key.first] += c * ipow(beta, key.second);
            if (pc.back() == 0 || qc.back() == 0) continue;
            CHECK(r.eval(BigRat(beta)) == BigRat(sylvester_resultant_exact(pc, qc)));
        }
    }
}

TEST_CASE("discriminant convention and pinned examples") {
    // disc_V(V^2 - B) = 4B
    BiPoly p = make_poly("V", "B", {{2, 0, 1}, {0, 1, -1}});
    CHECK(discriminant(p, 0) == rational_poly({0, 4}));

    // Degree-1 polynomials have discriminant 1.
    BiPoly lin = make_poly("V", "B", {{1, 1, 3}, {0, 0, 7}});
    CHECK(discriminant(lin, 0) == rational_poly({1}));

    // Degree-0 input is a usage error.
    BiPoly con = make_poly("V", "B", {{0, 2, 5}});
    CHECK_THROWS_AS(discriminant(con, 0), std::invalid_argument);

    // disc of a quadratic a V^2 + b V + c is b^2 - 4 a c.
    BiPoly quad = make_poly("V", "B", {{2, 0, 3}, {1, 1, 2}, {0, 0, -5}});
    // b^2 - 4ac = 4B^2 + 60
    CHECK(discriminant(quad, 0) == rational_poly({60, 0, 4}));
}

TEST_CASE("derivative") {
    BiPoly p = make_poly("V", "B", {{3, 2, 2}, {1, 0, 5}, {0, 4, 7}});
    BiPoly dv = derivative(p, 0);
    CHECK(dv == make_poly("V", "B", {{2, 2, 6}, {0, 0, 5}}));
    BiPoly db = derivative(p, 1);
    CHECK(db == make_poly("V", "B", {{3, 1, 4}, {0, 3, 28}}));
}

TEST_CASE("discriminant of the n=2 distance polynomial changes sign near its root") {
    UniPolyQ d = discriminant(pdist_recursive(2).poly, 0);
    // A root lies near B = cos(2.57414/2) ~ 0.27993.
    BigRat lo(27, 100), hi(29, 100);
    BigRat flo = d.eval(lo), fhi = d.eval(hi);
    CHECK(flo * fhi < 0);
}
