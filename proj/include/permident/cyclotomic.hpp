#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permident/errors.hpp"
#include "permident/poly.hpp"
#include "permident/rational.hpp"

namespace permident {

class CycloNum;
class CycloField;
using CycloFieldPtr = std::shared_ptr<const CycloField>;

// Q(zeta_n) realized as Q[x] modulo the n-th cyclotomic polynomial. Working
// modulo Phi_n (rather than x^n - 1) makes this a field, so every nonzero
// element is invertible.
class CycloField : public std::enable_shared_from_this<CycloField> {
public:
    static CycloFieldPtr create(unsigned n);

    unsigned order() const { return order_; }
    // phi(n), the degree of the extension.
    unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }
    const IntPoly& modulus() const { return modulus_; }
    // The modulus coefficients as rationals, cached for reductions.
    const std::vector<Rat>& modulus_rat() const { return modulus_rat_; }

    CycloNum zero() const;
    CycloNum one() const;
    // The distinguished primitive root: the class of x.
    CycloNum zeta() const;
    CycloNum from_rational(const Rat& r) const;

private:
    explicit CycloField(unsigned n);

    unsigned order_;
    IntPoly modulus_;
    std::vector<Rat> modulus_rat_;
};

// Element of Q(zeta_n): a coefficient vector of length phi(n), lowest degree
// first, always reduced modulo the field's Phi_n. Two elements are equal iff
// their fields have the same order and the vectors are identical; fields of
// different order never compare equal and never mix in arithmetic.
class CycloNum {
public:
    CycloNum(CycloFieldPtr field, std::vector<Rat> raw_coeffs);

    const CycloFieldPtr& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator/=(const CycloNum& o);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { a += b; return a; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { a -= b; return a; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { a *= b; return a; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { a /= b; return a; }

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    // Multiplicative inverse via the extended Euclidean algorithm on the
    // representative and Phi_n over the rationals.
    CycloNum inv() const;

    CycloNum pow(long e) const;

    // The constant coefficient when all higher coefficients vanish.
    std::optional<Rat> as_rational() const;

    // Coefficient tuple "(a0,a1,...)".
    std::string to_string() const;

private:
    void check_same_field(const CycloNum& o, const char* op) const;

    CycloFieldPtr field_;
    std::vector<Rat> c_;
};

// zeta^k for any integer k (reduced mod n).
CycloNum root_power(const CycloFieldPtr& field, long k);

inline CycloNum zero_like(const CycloNum& a) { return a.field()->zero(); }
inline CycloNum one_like(const CycloNum& a) { return a.field()->one(); }
inline bool is_zero(const CycloNum& a) { return a.is_zero(); }

} // namespace permident
