#pragma once

#include <vector>

#include "permident/cyclotomic.hpp"
#include "permident/matrix.hpp"
#include "permident/rational.hpp"

namespace permident {

// Evaluation points x_1..x_N. Must be pairwise distinct wherever they feed
// an off-diagonal denominator; zeros are legal (and deliberately planted by
// the vanishing checks).
using PointVector = std::vector<Rat>;

// Throws DuplicatePoints when two coordinates coincide.
void require_distinct(const PointVector& xs);

// X[j][j] = 1, X[j][k] = (x_j + x_k) / (x_j - x_k).
SquareMatrix<Rat> build_X(const PointVector& xs);

// Entrywise X - 1: zero diagonal, off-diagonal 2 x_k / (x_j - x_k).
SquareMatrix<Rat> build_X_minus_J(const PointVector& xs);

// 2n x 2n sign matrix: +1 on and below the diagonal, -1 above.
SquareMatrix<Rat> build_A(int n);

// (2n+1) x (2n+1) matrix over indices 0..2n with entries (j+k)/(j-k) off
// the diagonal and 1 on it. Deliberately odd-dimensional.
SquareMatrix<Rat> build_M(int n);

// size x size matrix over Q(zeta_n) with diagonal 1 and off-diagonal
// (1 + zeta^{e(j-k)}) / (1 - zeta^{e(j-k)}), where e = root_exp selects the
// primitive root zeta^e (gcd(e, n) = 1). size must be n or n-1.
SquareMatrix<CycloNum> build_C(int n, int size, int root_exp = 1);

} // namespace permident
