#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace twistcs {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Sparse bivariate polynomial with exact integer coefficients.
//
// Terms are keyed by the exponent pair (i, j) where i is the exponent of the
// first variable and j of the second. Exponents may be negative transiently
// (Laurent terms inside substitution); every value handed to callers is
// expected to have min exponent >= 0 in both variables. Zero coefficients are
// never stored, so two polynomials are equal iff their term maps are equal.
class BiPoly {
public:
    using Key = std::pair<long, long>;
    using TermMap = std::map<Key, BigInt>;

    BiPoly() = default;
    BiPoly(std::string var1, std::string var2)
        : vars_{std::move(var1), std::move(var2)} {}

    static BiPoly zero(const std::string& v1, const std::string& v2) {
        return BiPoly(v1, v2);
    }
    static BiPoly constant(const std::string& v1, const std::string& v2,
                           const BigInt& c) {
        BiPoly p(v1, v2);
        p.set_term(0, 0, c);
        return p;
    }
    static BiPoly monomial(const std::string& v1, const std::string& v2,
                           long i, long j, const BigInt& c) {
        BiPoly p(v1, v2);
        p.set_term(i, j, c);
        return p;
    }

    const std::pair<std::string, std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt coeff(long i, long j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void set_term(long i, long j, const BigInt& c) {
        if (c == 0)
            terms_.erase({i, j});
        else
            terms_[{i, j}] = c;
    }

    void add_term(long i, long j, const BigInt& c) {
        auto it = terms_.find({i, j});
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(Key{i, j}, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Degree in the first (axis=0) or second (axis=1) variable; -1 for zero.
    long degree(int axis) const;
    long min_exponent(int axis) const;  // minimal exponent; 0 for zero poly

    bool operator==(const BiPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly operator*(const BigInt& c) const;
    BiPoly pow(unsigned long e) const;

    // Multiply by var1^di * var2^dj (Laurent shift).
    BiPoly shifted(long di, long dj) const;

    // gcd of all coefficients, positive; 0 for the zero polynomial.
    BigInt content() const;

    // True if every exponent is >= 0 in both variables.
    bool has_nonnegative_exponents() const;

    // Structural sanity: no zero coefficients stored (map invariant holds by
    // construction; exposed for tests).
    bool no_zero_terms() const {
        for (const auto& [k, c] : terms_)
            if (c == 0) return false;
        return true;
    }

private:
    std::pair<std::string, std::string> vars_;
    TermMap terms_;

    void require_same_vars(const BiPoly& o) const {
        if (vars_ != o.vars_)
            throw std::invalid_argument("BiPoly: mismatched variable names ('" +
                                        vars_.first + "','" + vars_.second +
                                        "') vs ('" + o.vars_.first + "','" +
                                        o.vars_.second + "')");
    }
};

// Result of unit normalization: the primitive polynomial with min exponent 0
// in both variables, plus the removed unit (sign flip flag, monomial shift,
// integer content).
struct UnitNormalized {
    BiPoly poly;
    bool sign_flipped = false;
    long shift1 = 0;       // subtracted exponent of var1
    long shift2 = 0;       // subtracted exponent of var2
    BigInt content = 1;    // positive integer content divided out
};

// Divide out integer content and the monomial gcd, then fix the sign so the
// lexicographically least term (ascending first-variable exponent, then
// second) has a positive coefficient.
UnitNormalized unit_normalize(const BiPoly& p);

// True if p and q agree up to multiplication by +-(var1^a var2^b).
bool equal_up_to_unit(const BiPoly& p, const BiPoly& q);

// A rational substitution for both variables of a BiPoly: each variable maps
// to num/den in the target variables.
struct RationalSubst {
    BiPoly num1, den1;  // image of the first variable
    BiPoly num2, den2;  // image of the second variable
};

struct SubstResult {
    BiPoly poly;         // primitive, min exponent 0, sign-normalized
    bool sign_flipped;   // whether normalization flipped the overall sign
};

// Substitute variables by rational functions, clear denominators minimally
// (common denominator power per variable), and unit-normalize the result.
SubstResult substitute(const BiPoly& p, const RationalSubst& s);

}  // namespace twistcs
