#include "permident/builders.hpp"

#include <numeric>

#include "permident/errors.hpp"

namespace permident {

void require_distinct(const PointVector& xs) {
    const std::size_t n = xs.size();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
            if (xs[j] == xs[k])
                throw DuplicatePointsError("points " + std::to_string(j + 1) + " and " +
                                           std::to_string(k + 1) + " coincide (" +
                                           xs[j].to_string() + ")");
}

SquareMatrix<Rat> build_X(const PointVector& xs) {
    require_distinct(xs);
    const int n = static_cast<int>(xs.size());
    SquareMatrix<Rat> m(n, Rat(1));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (j != k)
                m.at(j, k) = (xs[static_cast<std::size_t>(j)] + xs[static_cast<std::size_t>(k)]) /
                             (xs[static_cast<std::size_t>(j)] - xs[static_cast<std::size_t>(k)]);
    return m;
}

SquareMatrix<Rat> build_X_minus_J(const PointVector& xs) {
    SquareMatrix<Rat> m = build_X(xs);
    const int n = m.dim();
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            m.at(j, k) -= Rat(1);
    return m;
}

SquareMatrix<Rat> build_A(int n) {
    if (n < 1) throw DomainError("build_A requires n >= 1");
    const int dim = 2 * n;
    SquareMatrix<Rat> m(dim, Rat(1));
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            m.at(i, j) = Rat(-1);
    return m;
}

SquareMatrix<Rat> build_M(int n) {
    if (n < 1) throw DomainError("build_M requires n >= 1");
    const int dim = 2 * n + 1;
    SquareMatrix<Rat> m(dim, Rat(1));
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
            if (j != k) m.at(j, k) = Rat(j + k, j - k);
    return m;
}

SquareMatrix<CycloNum> build_C(int n, int size, int root_exp) {
    if (n < 2) throw DomainError("build_C requires n >= 2");
    if (size != n && size != n - 1)
        throw DomainError("build_C size must be n or n-1, got size = " +
                          std::to_string(size) + " for n = " + std::to_string(n));
    if (std::gcd(root_exp, n) != 1)
        throw DomainError("build_C root exponent must be coprime to n");

    CycloFieldPtr field = CycloField::create(static_cast<unsigned>(n));
    const CycloNum one = field->one();

    // c_{j,k} depends only on (j - k) mod n; precompute the n - 1 distinct
    // off-diagonal values.
    std::vector<CycloNum> by_residue(static_cast<std::size_t>(n), one);
    for (int d = 1; d < n; ++d) {
        CycloNum z = root_power(field, static_cast<long>(d) * root_exp);
        CycloNum denom = one - z;
        if (denom.is_zero())
            throw InternalInconsistencyError(
                "degenerate denominator 1 - zeta^d for d = " + std::to_string(d));
        by_residue[static_cast<std::size_t>(d)] = (one + z) / denom;
    }

    SquareMatrix<CycloNum> m(size, one);
    for (int j = 0; j < size; ++j)
        for (int k = 0; k < size; ++k)
            if (j != k) {
                int d = (j - k) % n;
                if (d < 0) d += n;
                m.at(j, k) = by_residue[static_cast<std::size_t>(d)];
            }
    return m;
}

} // namespace permident
