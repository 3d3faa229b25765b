#pragma once

#include <vector>

#include "permident/rational.hpp"

namespace permident {

BigInt factorial(unsigned n);

// m!! = m(m-2)(m-4)... down to 1 or 2, with 0!! = (-1)!! = 1.
BigInt double_factorial(long m);

// Number of derangements of {1..n}, via D_n = (n-1)(D_{n-1} + D_{n-2}).
BigInt subfactorial(unsigned n);

BigInt binomial(unsigned n, unsigned k);

// Exact B_m for even m <= 60, from the convolution recurrence
// sum_{k=0}^{m} C(m+1,k) B_k = 0 with B_0 = 1, B_1 = -1/2.
Rat bernoulli(unsigned m);

// T_1..T_max_n, computed two independent ways (the Bernoulli relation
// T_n = (-1)^n 4^n (1 - 4^n) B_{2n} / (2n), and the in-place zigzag
// triangle) and cross-checked; disagreement throws InternalInconsistency.
std::vector<BigInt> tangent_numbers(unsigned max_n);

} // namespace permident
