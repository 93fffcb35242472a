#include "doctest.h"
#include "twistcs/geom.hpp"
#include "twistcs/roots.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace twistcs;
using Cx = std::complex<double>;

namespace {

std::vector<Cx> sorted_roots(std::vector<Cx> r) {
    std::sort(r.begin(), r.end(), [](Cx a, Cx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return r;
}

Cx eval(const std::vector<Cx>& c, Cx z) {
    Cx v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * z + c[i];
    return v;
}

}  // namespace

TEST_CASE("closed-form cases") {
    auto r = sorted_roots(all_roots(std::vector<double>{-1, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - Cx(-1, 0)) < 1e-12);
    CHECK(std::abs(r[1] - Cx(1, 0)) < 1e-12);

    // 4V^2 + 2V - 1 has roots (-1 +/- sqrt 5)/4.
    auto q = sorted_roots(all_roots(std::vector<double>{-1, 2, 4}));
    REQUIRE(q.size() == 2);
    CHECK(std::abs(q[0] - Cx((-1 - std::sqrt(5.0)) / 4, 0)) < 1e-12);
    CHECK(std::abs(q[1] - Cx((-1 + std::sqrt(5.0)) / 4, 0)) < 1e-12);

    auto lin = all_roots(std::vector<double>{3, -2});
    REQUIRE(lin.size() == 1);
    CHECK(std::abs(lin[0] - Cx(1.5, 0)) < 1e-15);
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(all_roots(std::vector<double>{5}), std::invalid_argument);
    CHECK_THROWS_AS(all_roots(std::vector<double>{}), std::invalid_argument);

    // Exact zero roots are peeled off.
    auto r = sorted_roots(all_roots(std::vector<double>{0, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Cx(0, 0));
    CHECK(r[1] == Cx(0, 0));

    // A vanishing leading coefficient drops the degree.
    auto d = all_roots(std::vector<double>{1, 1, 1e-20});
    REQUIRE(d.size() == 1);
    CHECK(std::abs(d[0] - Cx(-1, 0)) < 1e-12);
}

TEST_CASE("random polynomials satisfy the residual bound") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    std::uniform_int_distribution<int> deg(2, 14);
    for (int iter = 0; iter < 40; ++iter) {
        int d = deg(rng);
        std::vector<Cx> c(d + 1);
        for (auto& x : c) x = Cx(coeff(rng), coeff(rng));
        if (std::abs(c.back()) < 0.5) c.back() += Cx(1.0, 0);
        auto roots = all_roots(c);
        REQUIRE(static_cast<int>(roots.size()) == d);
        double maxc = 0;
        for (auto& x : c) maxc = std::max(maxc, std::abs(x));
        for (Cx r : roots) {
            double bound = 1e-10 * std::pow(1.0 + std::abs(r), double(d)) * maxc;
            CHECK(std::abs(eval(c, r)) <= bound);
        }
    }
}

TEST_CASE("Vieta sums on a specialized distance polynomial") {
    UniPolyC p = specialize(1, ConeAngle(2.0));
    auto roots = all_roots(p);
    REQUIRE(roots.size() == 2);
    Cx sum = roots[0] + roots[1];
    Cx expect = -p[1] / p[2];
    CHECK(std::abs(sum - expect) < 1e-9);
    Cx prod = roots[0] * roots[1];
    CHECK(std::abs(prod - p[0] / p[2]) < 1e-9);
}

TEST_CASE("deterministic output") {
    std::vector<double> c{-1, 3, -3, 2, 0.5, -7, 1};
    auto a = all_roots(c);
    auto b = all_roots(c);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("high-degree Wilkinson-style stress stays within the residual bound") {
    // (V-1)(V-2)...(V-8) expanded; classic ill-conditioning stress.
    std::vector<double> c{1};
    for (int r = 1; r <= 8; ++r) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = next;
    }
    auto roots = sorted_roots(all_roots(c));
    REQUIRE(roots.size() == 8);
    for (int r = 1; r <= 8; ++r) CHECK(std::abs(roots[r - 1] - Cx(r, 0)) < 1e-6);
}
