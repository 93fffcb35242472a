#include "twistcs/roots.hpp"

#include <algorithm>
#include <cmath>

namespace twistcs {

namespace {

using Cx = std::complex<double>;

// Fujiwara bound: all roots lie within radius 2*max_k |c[d-k]/c[d]|^(1/k).
double initial_radius(const std::vector<Cx>& c) {
    size_t d = c.size() - 1;
    double r = 0.0;
    for (size_t k = 1; k <= d; ++k) {
        double a = std::abs(c[d - k]) / std::abs(c[d]);
        if (a > 0.0) r = std::max(r, 2.0 * std::pow(a, 1.0 / double(k)));
    }
    return r > 0.0 ? r : 1.0;
}

// p(z) and p'(z) by Horner, plus the scale sum_k |c[k]| |z|^k used for the
// backward-error stopping test.
void eval_all(const std::vector<Cx>& c, Cx z, Cx& p, Cx& dp, double& scale) {
    p = c.back();
    dp = 0.0;
    scale = std::abs(c.back());
    double az = std::abs(z);
    for (size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
        scale = scale * az + std::abs(c[i]);
    }
}

}  // namespace

std::vector<Cx> all_roots(std::vector<Cx> c) {
    double top = 0.0;
    for (const Cx& x : c) top = std::max(top, std::abs(x));
    if (c.empty() || top == 0.0)
        throw std::invalid_argument("all_roots: zero polynomial");
    while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * top) c.pop_back();

    std::vector<Cx> roots;
    size_t zero_mult = 0;
    while (zero_mult + 1 < c.size() && c[zero_mult] == 0.0) ++zero_mult;
    if (zero_mult > 0) {
        roots.assign(zero_mult, Cx(0.0, 0.0));
        c.erase(c.begin(), c.begin() + static_cast<long>(zero_mult));
    }

    size_t d = c.size() - 1;
    if (d == 0) {
        if (roots.empty())
            throw std::invalid_argument("all_roots: constant polynomial");
        return roots;
    }
    if (d == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }

    const double radius = initial_radius(c);
    std::vector<Cx> z(d);
    for (size_t j = 0; j < d; ++j) {
        double theta = 2.0 * M_PI * double(j) / double(d) + 0.376991;
        z[j] = radius * Cx(std::cos(theta), std::sin(theta));
    }

    const int max_sweeps = 400;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool moved = false;
        for (size_t i = 0; i < d; ++i) {
            Cx p, dp;
            double scale;
            eval_all(c, z[i], p, dp, scale);
            if (std::abs(p) <= 4e-15 * scale) continue;  // converged in place
            Cx corr;
            if (dp == Cx(0.0, 0.0)) {
                corr = Cx(1e-6, 1e-6) * (1.0 + std::abs(z[i]));
            } else {
                Cx newton = p / dp;
                Cx s(0.0, 0.0);
                for (size_t j = 0; j < d; ++j)
                    if (j != i) s += 1.0 / (z[i] - z[j]);
                Cx denom = 1.0 - newton * s;
                corr = denom == Cx(0.0, 0.0) ? newton : newton / denom;
            }
            z[i] -= corr;
            if (std::abs(corr) > 1e-15 * (1.0 + std::abs(z[i]))) moved = true;
        }
        if (!moved) break;
    }

    // Final residual acceptance regardless of how the loop ended.
    double maxc = 0.0;
    for (const Cx& x : c) maxc = std::max(maxc, std::abs(x));
    double worst = 0.0;
    for (size_t i = 0; i < d; ++i) {
        Cx p, dp;
        double scale;
        eval_all(c, z[i], p, dp, scale);
        double bound = 1e-10 * std::pow(1.0 + std::abs(z[i]), double(d)) * maxc;
        worst = std::max(worst, std::abs(p) / (bound > 0 ? bound : 1.0));
    }
    if (worst > 1.0)
        throw NumericalError(
            "all_roots: iteration did not reach the residual bound", worst);

    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

std::vector<Cx> all_roots(const std::vector<double>& c) {
    std::vector<Cx> cc(c.begin(), c.end());
    return all_roots(std::move(cc));
}

}  // namespace twistcs
