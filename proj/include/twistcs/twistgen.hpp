#pragma once

#include "twistcs/bipoly.hpp"

namespace twistcs {

// Twist knots are indexed by the even crossing parameter 2n; the knot is
// hyperbolic iff n is not 0 or -1.
struct TwistKnot {
    long n;
    bool hyperbolic() const { return n != 0 && n != -1; }
};

// Complex distance polynomial P_2n in the variables (V, B).
struct PDist {
    long n;
    BiPoly poly;  // vars ("V", "B")
};

// A-polynomial A_2n in the variables (L, M).
struct APoly {
    long n;
    BiPoly poly;  // vars ("L", "M")
    bool unit_normalized = false;
};

// A twist knot with an odd crossing parameter m is the mirror of the knot
// with even parameter -m-1; even parameters are returned unchanged.
long normalize_twist_param(long m);

// The recursive generator for P_2n: two-sided recursion from the printed
// initial conditions with multiplier (4B^4-8B^2+4)V^2 - 4B^4+8B^2-2.
// Memoized; thread-safe.
PDist pdist_recursive(long n);

// The explicit binomial-sum generator for P_2n. Internally works over a
// common denominator (V-1)^|n| and divides it back out exactly; throws
// logic_error if the division leaves a remainder.
PDist pdist_explicit(long n);

// Recursive generator for A_2n from the printed initial conditions and
// A_2n = A_u A_2(n-+1) - M^4 (1+L M^2)^4 A_2(n-+2). Memoized; thread-safe.
APoly apoly_recursive(long n);

// Explicit binomial-sum generator for A_2n. The printed sum's negative
// powers of M and (1+LM^2) all cancel against the prefactor; the assembly
// folds them in exactly, so no Laurent terms survive. Cross-checked against
// the recursive generator; throws logic_error if they disagree beyond a
// monomial unit and sign.
APoly apoly_explicit(long n);

// Derive A_2n from P_2n by the change of variables
//   V -> (M^2+1)(LM^2-1) / ((M^2-1)(LM^2+1)),   B -> (M+1/M)/2,
// clearing denominators and unit-normalizing. `sign_flipped` (if non-null)
// receives whether normalization flipped the sign.
APoly apoly_from_pdist(long n, bool* sign_flipped = nullptr);

// The multiplier polynomial of the P recursion and A_u of the A recursion
// (exposed for golden tests).
BiPoly pdist_multiplier();
BiPoly apoly_u();

}  // namespace twistcs
