#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "permident/errors.hpp"

namespace permident {

using BigInt = mpz_class;

// Arbitrary-precision rational, always in canonical lowest terms:
// gcd(|num|, den) = 1 and den >= 1, with zero stored as 0/1. This is the
// scalar for every real-variable identity in the suite.
//
// Text format: canonical "p/q" with q > 1, or just "p" when q = 1, with an
// optional leading '-'. parse() also accepts non-lowest-terms input and
// canonicalizes, but rejects a zero denominator and any sign after '/'.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {} // NOLINT: implicit by design
    explicit Rat(const BigInt& n) : v_(n) {}

    Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

    Rat(const BigInt& num, const BigInt& den) {
        if (sgn(den) == 0)
            throw DivisionByZeroError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    static Rat parse(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    // Integer power; negative exponents invert first.
    Rat pow(long e) const;

    std::string to_string() const;

private:
    explicit Rat(mpq_class q) : v_(std::move(q)) {}

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Ring hooks used by the generic matrix engines.
inline Rat zero_like(const Rat&) { return Rat(); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool is_zero(const Rat& r) { return r.is_zero(); }

} // namespace permident
