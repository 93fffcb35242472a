#pragma once

#include <vector>

#include "twistcs/bipoly.hpp"

namespace twistcs {

// Dense univariate polynomial with exact rational coefficients,
// index = degree. Leading coefficient nonzero unless the polynomial is zero.
struct UniPolyQ {
    std::vector<BigRat> c;

    UniPolyQ() = default;
    explicit UniPolyQ(std::vector<BigRat> coeffs) : c(std::move(coeffs)) {
        trim();
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }

    BigRat eval(const BigRat& x) const {
        BigRat v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }

    bool operator==(const UniPolyQ& o) const { return c == o.c; }

    // Clear denominators and divide out integer content; returns integer
    // coefficients of a primitive polynomial with the same roots and the
    // same sign of values (positive rescaling).
    std::vector<BigInt> primitive_integer() const;
};

// Derivative of p with respect to one of its variables (axis 0 or 1).
BiPoly derivative(const BiPoly& p, int axis);

// Resultant of p and q with respect to the variable on `axis` (0 = first,
// 1 = second), as a polynomial in the remaining variable. Sylvester
// convention: det of the matrix with deg(q) shifted coefficient rows of p on
// top of deg(p) shifted rows of q; e.g. res(V-1, V^2-B, V) = 1-B and
// res(V^2, V+B, V) = B^2.
//
// Errors: both inputs zero, or Laurent (negative) exponents -> invalid_argument.
UniPolyQ resultant(const BiPoly& p, const BiPoly& q, int axis);

// Discriminant of p with respect to `axis`:
//   disc(p) = (-1)^(d(d-1)/2) * resultant(p, dp/dx, x) / lc(p),
// the classical convention, so disc(V^2 - B, V) = 4B. Degree-1 input returns
// the unit polynomial 1; degree 0 is a usage error.
UniPolyQ discriminant(const BiPoly& p, int axis);

// Exact Sylvester-matrix resultant of two integer-coefficient univariate
// polynomials via fraction-free (Bareiss) elimination. Quadratic-size inputs
// only; used as an independent cross-check oracle for `resultant`.
BigInt sylvester_resultant_exact(const std::vector<BigInt>& p,
                                 const std::vector<BigInt>& q);

}  // namespace twistcs
