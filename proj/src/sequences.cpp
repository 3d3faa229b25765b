#include "permident/sequences.hpp"

#include "permident/errors.hpp"

namespace permident {

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt double_factorial(long m) {
    if (m < -1) throw DomainError("double_factorial requires m >= -1");
    BigInt out(1);
    for (long v = m; v >= 2; v -= 2) out *= v;
    return out;
}

BigInt subfactorial(unsigned n) {
    if (n == 0) return BigInt(1);
    BigInt prev2(1), prev1(0); // D_0, D_1
    if (n == 1) return prev1;
    BigInt cur;
    for (unsigned k = 2; k <= n; ++k) {
        cur = BigInt(k - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return cur;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

namespace {

// B_0..B_m inclusive.
std::vector<Rat> bernoulli_table(unsigned m) {
    std::vector<Rat> b(m + 1);
    b[0] = Rat(1);
    for (unsigned j = 1; j <= m; ++j) {
        Rat acc;
        for (unsigned k = 0; k < j; ++k)
            acc += Rat(binomial(j + 1, k)) * b[k];
        b[j] = -acc / Rat(BigInt(j + 1));
    }
    return b;
}

std::vector<BigInt> tangent_by_bernoulli(unsigned max_n) {
    const std::vector<Rat> b = bernoulli_table(2 * max_n);
    std::vector<BigInt> t(max_n);
    for (unsigned n = 1; n <= max_n; ++n) {
        BigInt four_n;
        mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
        const BigInt one_minus_four_n = 1 - four_n;
        Rat value = Rat(four_n) * Rat(one_minus_four_n) * b[2 * n] / Rat(BigInt(2 * n));
        if (n % 2 != 0) value = -value;
        if (value.den() != 1)
            throw InternalInconsistencyError("tangent number is not an integer");
        t[n - 1] = value.num();
    }
    return t;
}

// In-place tangent-number triangle.
std::vector<BigInt> tangent_by_triangle(unsigned max_n) {
    std::vector<BigInt> t(max_n);
    t[0] = 1;
    for (unsigned k = 2; k <= max_n; ++k) t[k - 1] = BigInt(k - 1) * t[k - 2];
    for (unsigned k = 2; k <= max_n; ++k)
        for (unsigned j = k; j <= max_n; ++j)
            t[j - 1] = BigInt(j - k) * t[j - 2] + BigInt(j - k + 2) * t[j - 1];
    return t;
}

} // namespace

Rat bernoulli(unsigned m) {
    if (m == 0 || m % 2 != 0)
        throw DomainError("bernoulli requires even m >= 2, got " + std::to_string(m));
    if (m > 60)
        throw SizeGuardError("bernoulli limited to m <= 60, got m = " + std::to_string(m));
    return bernoulli_table(m)[m];
}

std::vector<BigInt> tangent_numbers(unsigned max_n) {
    if (max_n == 0) throw DomainError("tangent_numbers requires max_n >= 1");
    if (max_n > 30)
        throw SizeGuardError("tangent_numbers limited to max_n <= 30, got " +
                             std::to_string(max_n));
    std::vector<BigInt> a = tangent_by_bernoulli(max_n);
    std::vector<BigInt> b = tangent_by_triangle(max_n);
    if (a != b)
        throw InternalInconsistencyError(
            "tangent-number paths disagree (Bernoulli relation vs triangle)");
    return a;
}

} // namespace permident
