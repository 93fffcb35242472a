#include "doctest.h"
#include "test_util.hpp"
#include "twistcs/twistgen.hpp"

#include <thread>

using namespace twistcs;
using testutil::make_poly;

TEST_CASE("twist parameter normalization (mirror rule)") {
    CHECK(normalize_twist_param(0) == 0);
    CHECK(normalize_twist_param(2) == 2);
    CHECK(normalize_twist_param(-4) == -4);
    CHECK(normalize_twist_param(1) == -2);
    CHECK(normalize_twist_param(3) == -4);
    CHECK(normalize_twist_param(-3) == 2);
}

TEST_CASE("hyperbolicity predicate") {
    CHECK_FALSE(TwistKnot{0}.hyperbolic());
    CHECK_FALSE(TwistKnot{-1}.hyperbolic());
    CHECK(TwistKnot{1}.hyperbolic());
    CHECK(TwistKnot{-2}.hyperbolic());
    CHECK(TwistKnot{9}.hyperbolic());
}

TEST_CASE("printed distance polynomials") {
    CHECK(pdist_recursive(-1).poly ==
          make_poly("V", "B", {{1, 2, 2}, {1, 0, -2}, {0, 2, 2}, {0, 0, -1}}));
    CHECK(pdist_recursive(0).poly == make_poly("V", "B", {{0, 0, 1}}));
    CHECK(pdist_recursive(1).poly ==
          make_poly("V", "B",
                    {{2, 4, 4}, {2, 2, -8}, {2, 0, 4},
                     {1, 0, 2}, {1, 2, -2},
                     {0, 4, -4}, {0, 2, 6}, {0, 0, -1}}));
}

TEST_CASE("printed A-polynomials and the recursion seed") {
    CHECK(apoly_recursive(-1).poly == make_poly("L", "M", {{0, 0, 1}, {1, 6, 1}}));
    CHECK(apoly_recursive(0).poly == make_poly("L", "M", {{0, 0, -1}}));
    CHECK(apoly_recursive(1).poly ==
          make_poly("L", "M",
                    {{1, 0, 1}, {1, 2, -1}, {0, 4, -1}, {1, 4, -2},
                     {2, 4, -1}, {1, 6, -1}, {1, 8, 1}}));
    CHECK(apoly_recursive(-2).poly ==
          make_poly("L", "M",
                    {{0, 0, 1}, {1, 0, -1}, {1, 2, 2}, {1, 4, 2},
                     {2, 4, 1}, {2, 6, -1}, {1, 8, -1}, {1, 10, 1},
                     {2, 10, 2}, {2, 12, 2}, {2, 14, -1}, {3, 14, 1}}));
    CHECK(apoly_u() ==
          make_poly("L", "M",
                    {{0, 0, 1}, {1, 0, -1}, {1, 2, 2}, {0, 4, 1},
                     {1, 4, 2}, {2, 4, 1}, {1, 6, 2}, {1, 8, -1}, {2, 8, 1}}));
}

TEST_CASE("recursive and explicit generators agree exactly for |n| <= 10") {
    for (long n = -10; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(pdist_recursive(n).poly == pdist_explicit(n).poly);
        CHECK(apoly_recursive(n).poly == apoly_explicit(n).poly);
    }
}

TEST_CASE("A-polynomial derived from the distance polynomial (change of variables)") {
    for (long n = -6; n <= 6; ++n) {
        CAPTURE(n);
        bool flipped = false;
        APoly der = apoly_from_pdist(n, &flipped);
        CHECK(der.unit_normalized);
        CHECK(equal_up_to_unit(der.poly, apoly_recursive(n).poly));
    }
}

TEST_CASE("degree profile of the two families") {
    for (long n = -8; n <= 8; ++n) {
        CAPTURE(n);
        const BiPoly& p = pdist_recursive(n).poly;
        if (n > 0) {
            CHECK(p.degree(0) == 2 * n);
            CHECK(p.degree(1) == 4 * n);
        }
        if (n < 0) {
            CHECK(p.degree(0) == -2 * n - 1);
            CHECK(p.degree(1) == -4 * n - 2);
        }

        const BiPoly a = apoly_recursive(n).poly;
        if (n > 0) {
            CHECK(a.degree(0) == 2 * n);
            CHECK(a.degree(1) == 8 * n);
        }
        if (n < 0) {
            CHECK(a.degree(0) == -2 * n - 1);
            CHECK(a.degree(1) == -8 * n - 2);
        }
    }
}

TEST_CASE("distance polynomial has only even powers of B") {
    for (long n = -8; n <= 8; ++n) {
        const PDist p = pdist_recursive(n);
        for (const auto& [key, c] : p.poly.terms()) CHECK(key.second % 2 == 0);
    }
}

TEST_CASE("memoized generators are safe under concurrent access") {
    std::vector<std::thread> threads;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&] {
            for (long n = -7; n <= 7; ++n) {
                if (pdist_recursive(n).poly != pdist_explicit(n).poly) ok = false;
                if (apoly_recursive(n).poly != apoly_explicit(n).poly) ok = false;
            }
        });
    for (auto& th : threads) th.join();
    CHECK(ok.load());
}
