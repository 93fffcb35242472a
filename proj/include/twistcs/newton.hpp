#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistcs/bipoly.hpp"
#include "twistcs/twistgen.hpp"

namespace twistcs {

// An exact rational slope dM/dL; vertical edges have dl == 0.
struct Slope {
    long dm = 0;  // numerator (change in the M exponent)
    long dl = 1;  // denominator (change in the L exponent), >= 0; 0 = vertical
    bool vertical() const { return dl == 0; }
    bool operator==(const Slope& o) const { return dm == o.dm && dl == o.dl; }
    std::string str() const {
        return vertical() ? "inf"
                          : (dl == 1 ? std::to_string(dm)
                                     : std::to_string(dm) + "/" + std::to_string(dl));
    }
};

struct PolygonEdge {
    std::pair<long, long> from, to;  // lattice endpoints, counterclockwise
    Slope slope;                     // reduced, dl >= 0
    std::vector<std::pair<long, long>> lattice_points;  // on the edge, inclusive
};

struct NewtonPolygon {
    // Hull vertices in counterclockwise order starting from the
    // lexicographically least vertex. A single point has one vertex and no
    // edges; two points give the two opposite orientations of one segment.
    std::vector<std::pair<long, long>> vertices;
    std::vector<PolygonEdge> edges;
};

// Univariate edge polynomial in t with exact integer coefficients,
// constant term nonzero.
struct EdgePoly {
    Slope slope;
    std::vector<BigInt> coeffs;  // ascending, constant term = corner coefficient
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

// Convex hull (monotone chain, exact integer arithmetic) of the support of A.
// Throws invalid_argument on the zero polynomial.
NewtonPolygon newton_polygon(const BiPoly& A);

// Edge polynomial of one hull edge: substitute t for L^b M^a along the edge
// and divide by the monomial at the lexicographically smaller corner, so the
// constant term is that corner's coefficient. Throws invalid_argument if the
// edge is not on the hull of A.
EdgePoly edge_polynomial(const BiPoly& A, const PolygonEdge& edge);

// Report of the edge-polynomial verification for A_2n.
struct EdgeTheoremReport {
    long n = 0;
    bool pass = false;
    std::vector<std::string> failures;           // human-readable mismatches
    std::vector<Slope> nonzero_slopes;           // deduplicated, found on hull
    std::vector<std::pair<Slope, EdgePoly>> checked;  // per nonzero-slope edge
};

// Check the closed-form edge-polynomial table for A_2n over the nonzero
// nonvertical hull slopes:
//   n > 0:  slopes {-4n, 4};  slope -4n -> +-(t-1);
//           slope 4 -> -(t-1)^n (n even), +-(t-1)^n (n odd)
//   n < -1: slopes {-4n+2, 4}; slope -4n+2 -> t+1 (exact sign);
//           slope 4 -> +-(t-1)^(-n-1) (n even), +(t-1)^(-n-1) (n odd)
//   n = -1: single slope {6} with edge polynomial t+1.
// Requires n != 0.
EdgeTheoremReport verify_edge_theorem(long n);

// Least common multiple of the orders of the roots of unity among the roots
// of e (cyclotomic factors extracted by exact division); 1 if none.
long boundary_component_count(const EdgePoly& e);

// Exact division helper: try to write e = +-(t-1)^k (t+1)^l; returns
// (k, l, leading unit) or nullopt if a different factor remains.
struct PlusMinusOneFactorization {
    long k = 0;          // multiplicity of (t-1)
    long l = 0;          // multiplicity of (t+1)
    BigInt unit = 1;     // remaining constant (+-1 for the theorem's cases)
};
std::optional<PlusMinusOneFactorization> factor_plus_minus_one(const EdgePoly& e);

}  // namespace twistcs
