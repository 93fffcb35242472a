#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistcs {

// The simultaneous iteration failed to converge within the iteration cap.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double worst)
        : std::runtime_error(what), worst_residual(worst) {}
    double worst_residual;
};

// All complex roots, with multiplicity, of sum_k c[k] z^k (ascending
// coefficients). Aberth–Ehrlich simultaneous iteration from a deterministic
// circular initial configuration, so results are reproducible bit-for-bit.
//
// Leading coefficients that are exactly zero, or smaller than 1e-14 times the
// largest coefficient magnitude, are dropped (degree-drop handling: the
// corresponding roots lie out at ~1e14 and are not meaningful in double
// precision). Exact zero roots are peeled off. A polynomial that is constant
// after handling is a usage error; the zero polynomial likewise.
//
// Every returned root r satisfies |p(r)| <= 1e-10 * (1+|r|)^deg * max|c|;
// otherwise NumericalError carries the worst residual.
std::vector<std::complex<double>> all_roots(std::vector<std::complex<double>> c);
std::vector<std::complex<double>> all_roots(const std::vector<double>& c);

}  // namespace twistcs
