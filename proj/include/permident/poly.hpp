#pragma once

#include <string>
#include <vector>

#include "permident/errors.hpp"
#include "permident/rational.hpp"

namespace permident {

// Dense univariate polynomial over the integers, coefficients stored lowest
// degree first. The zero polynomial has an empty coefficient vector; any
// other polynomial keeps a nonzero leading coefficient.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly monomial(unsigned degree, BigInt coeff = BigInt(1));
    // x^n - 1
    static IntPoly x_pow_minus_one(unsigned n);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const BigInt& coeff(unsigned i) const {
        static const BigInt zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return a.c_ != b.c_; }

    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;

    // Quotient of an exact division; throws InternalInconsistency if the
    // division leaves a remainder (never happens for cyclotomic factors).
    IntPoly exact_div(const IntPoly& divisor) const;

    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// n-th cyclotomic polynomial, computed by exact division of x^n - 1 by the
// product of the cyclotomic polynomials of the proper divisors of n.
IntPoly cyclotomic_poly(unsigned n);

} // namespace permident
