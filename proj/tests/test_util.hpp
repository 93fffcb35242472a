#pragma once

#include <initializer_list>
#include <random>
#include <tuple>

#include "twistcs/bipoly.hpp"

namespace twistcs::testutil {

inline BiPoly make_poly(const std::string& v1, const std::string& v2,
                        std::initializer_list<std::tuple<long, long, long>> terms) {
    BiPoly p = BiPoly::zero(v1, v2);
    for (const auto& [i, j, c] : terms) p.add_term(i, j, BigInt(c));
    return p;
}

inline BiPoly random_poly(std::mt19937& rng, const std::string& v1,
                          const std::string& v2, int max_exp = 4,
                          int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-5, 5);
    BiPoly p = BiPoly::zero(v1, v2);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) p.add_term(exp(rng), exp(rng), BigInt(coeff(rng)));
    return p;
}

}  // namespace twistcs::testutil
