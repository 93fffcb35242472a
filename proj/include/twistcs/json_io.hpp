#pragma once

#include <string>

#include "twistcs/bipoly.hpp"
#include "twistcs/chernsimons.hpp"
#include "twistcs/newton.hpp"

namespace twistcs {

// {"vars": ["V","B"], "terms": [[i, j, "coeff"], ...]} with terms sorted
// ascending by (i, j) and coefficients as decimal strings (exact).
std::string bipoly_to_json(const BiPoly& p);

// Inverse of bipoly_to_json; also accepts integer coefficients. Throws
// std::invalid_argument on malformed input or duplicate exponent pairs.
BiPoly bipoly_from_json(const std::string& text);

// {"vertices": [[i,j],...], "edges": [{"slope": "a/b", "poly_t": [...]},...]}
// Vertices in hull order; one entry per directed edge. Edge-polynomial
// coefficients ascending in t, as JSON integers when they fit in 53 bits and
// decimal strings otherwise.
std::string polygon_to_json(const BiPoly& p);

// Plain-text polynomial in V and B: groups by descending power of V, each
// coefficient polynomial in B rendered without spaces, parenthesized when it
// multiplies a positive power of V.
std::string render_pdist(const BiPoly& p);

// Plain-text polynomial in L and M: flat terms ordered by ascending
// (M-degree, L-degree), unit coefficients omitted except for constants.
std::string render_apoly(const BiPoly& p);

// One row per grid sample over both ranges:
//   alpha,re_v,im_v,re_v1,im_v1,re_v2,im_v2,integrand
// Hyperbolic samples fill the V columns (V = 1/W), spherical samples fill
// V1/V2; absent columns are left empty.
std::string branch_csv(const CsSamples& s);

}  // namespace twistcs
