#include "permident/poly.hpp"

#include <sstream>

namespace permident {

IntPoly IntPoly::monomial(unsigned degree, BigInt coeff) {
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = std::move(coeff);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::x_pow_minus_one(unsigned n) {
    std::vector<BigInt> c(n + 1, BigInt(0));
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coeff(static_cast<unsigned>(i)) - o.coeff(static_cast<unsigned>(i));
    return IntPoly(std::move(out));
}

IntPoly IntPoly::exact_div(const IntPoly& divisor) const {
    if (divisor.is_zero())
        throw DivisionByZeroError("polynomial division by zero");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree())
        throw InternalInconsistencyError("polynomial division with remainder");

    std::vector<BigInt> rem = c_;
    const int dq = degree() - divisor.degree();
    std::vector<BigInt> quot(dq + 1, BigInt(0));
    const BigInt& lead = divisor.c_.back();
    for (int k = dq; k >= 0; --k) {
        BigInt& top = rem[k + divisor.degree()];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw InternalInconsistencyError("polynomial division with remainder");
        BigInt q = top / lead;
        quot[k] = q;
        for (int j = 0; j <= divisor.degree(); ++j)
            rem[k + j] -= q * divisor.c_[j];
    }
    for (const BigInt& r : rem)
        if (sgn(r) != 0)
            throw InternalInconsistencyError("polynomial division with remainder");
    return IntPoly(std::move(quot));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& a = c_[i];
        if (sgn(a) == 0) continue;
        if (!first) os << (sgn(a) > 0 ? " + " : " - ");
        else if (sgn(a) < 0) os << "-";
        first = false;
        BigInt mag = abs(a);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPoly cyclotomic_poly(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic_poly requires n >= 1");
    if (n == 1) return IntPoly({BigInt(-1), BigInt(1)}); // x - 1
    IntPoly product = IntPoly::monomial(0);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) product = product * cyclotomic_poly(d);
    return IntPoly::x_pow_minus_one(n).exact_div(product);
}

} // namespace permident
