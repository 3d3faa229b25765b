#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "permident/errors.hpp"
#include "permident/matrix.hpp"

namespace permident {

inline constexpr int kMaxNaivePermanentSize = 10;
inline constexpr int kMaxRyserSize = 24;

// Permanent by expansion over all N! permutations. The independent oracle
// for the Ryser engines.
template <class R>
R permanent_naive(const SquareMatrix<R>& m) {
    const int n = m.dim();
    if (n > kMaxNaivePermanentSize)
        throw SizeGuardError("permanent_naive limited to N <= " +
                             std::to_string(kMaxNaivePermanentSize) + ", got N = " +
                             std::to_string(n));
    std::vector<int> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = i;
    R acc = zero_like(m.at(0, 0));
    do {
        R prod = m.at(0, col[0]);
        for (int i = 1; i < n; ++i) prod *= m.at(i, col[static_cast<std::size_t>(i)]);
        acc += prod;
    } while (std::next_permutation(col.begin(), col.end()));
    return acc;
}

namespace detail {

// Signed sum of Ryser terms for subset indices k in [k_lo, k_hi). The term
// for k uses the column set gray(k) = k ^ (k >> 1); row sums are seeded from
// gray(k_lo) and then updated by one add/subtract per row per step.
template <class R>
R ryser_range(const SquareMatrix<R>& m, std::uint64_t k_lo, std::uint64_t k_hi) {
    const int n = m.dim();
    R acc = zero_like(m.at(0, 0));
    std::vector<R> row_sums(static_cast<std::size_t>(n), acc);

    std::uint64_t gray = k_lo ^ (k_lo >> 1);
    for (int j = 0; j < n; ++j)
        if (gray & (std::uint64_t(1) << j))
            for (int i = 0; i < n; ++i) row_sums[static_cast<std::size_t>(i)] += m.at(i, j);

    for (std::uint64_t k = k_lo; k < k_hi; ++k) {
        if (k != k_lo) {
            const std::uint64_t next_gray = k ^ (k >> 1);
            const int j = std::countr_zero(gray ^ next_gray);
            if (next_gray & (std::uint64_t(1) << j))
                for (int i = 0; i < n; ++i)
                    row_sums[static_cast<std::size_t>(i)] += m.at(i, j);
            else
                for (int i = 0; i < n; ++i)
                    row_sums[static_cast<std::size_t>(i)] -= m.at(i, j);
            gray = next_gray;
        }
        R prod = row_sums[0];
        for (int i = 1; i < n; ++i) prod *= row_sums[static_cast<std::size_t>(i)];
        if (std::popcount(gray) % 2 == 0)
            acc += prod;
        else
            acc -= prod;
    }
    return acc;
}

inline void check_ryser_size(int n) {
    if (n > kMaxRyserSize)
        throw SizeGuardError("permanent_ryser limited to N <= " +
                             std::to_string(kMaxRyserSize) + ", got N = " +
                             std::to_string(n));
}

} // namespace detail

// Ryser's inclusion-exclusion permanent,
//   per(M) = (-1)^N sum_{S != 0} (-1)^|S| prod_i sum_{j in S} M[i][j],
// walked in Gray-code order. Serial reference implementation.
template <class R>
R permanent_ryser_serial(const SquareMatrix<R>& m) {
    const int n = m.dim();
    detail::check_ryser_size(n);
    R acc = detail::ryser_range(m, 1, (std::uint64_t(1) << n));
    return n % 2 == 0 ? acc : -acc;
}

// Parallel Ryser: the 2^N-1 subset sequence is split into contiguous
// Gray-code ranges with independently seeded row sums, and the partial sums
// are combined in range order. The arithmetic is exact, so the result is
// identical to the serial engine for every chunk count.
template <class R>
R permanent_ryser(const SquareMatrix<R>& m, int chunks = 0) {
    const int n = m.dim();
    detail::check_ryser_size(n);
    if (chunks == 0) {
#ifdef _OPENMP
        chunks = n >= 10 ? omp_get_max_threads() : 1;
#else
        chunks = 1;
#endif
    }
    const std::uint64_t k_end = std::uint64_t(1) << n;
    const std::uint64_t total = k_end - 1;
    if (chunks < 1 || static_cast<std::uint64_t>(chunks) > total) chunks = 1;
    if (chunks == 1) return permanent_ryser_serial(m);

    std::vector<std::uint64_t> bounds(static_cast<std::size_t>(chunks) + 1);
    for (int c = 0; c <= chunks; ++c)
        bounds[static_cast<std::size_t>(c)] =
            1 + total * static_cast<std::uint64_t>(c) / static_cast<std::uint64_t>(chunks);

    std::vector<R> partial(static_cast<std::size_t>(chunks), zero_like(m.at(0, 0)));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int c = 0; c < chunks; ++c)
        partial[static_cast<std::size_t>(c)] =
            detail::ryser_range(m, bounds[static_cast<std::size_t>(c)],
                                bounds[static_cast<std::size_t>(c) + 1]);

    R acc = partial[0];
    for (int c = 1; c < chunks; ++c) acc += partial[static_cast<std::size_t>(c)];
    return n % 2 == 0 ? acc : -acc;
}

// Exact determinant by Gaussian elimination with nonzero pivoting; the
// scalar type must support division (Rat and CycloNum both do).
template <class R>
R determinant(const SquareMatrix<R>& input) {
    SquareMatrix<R> a = input;
    const int n = a.dim();
    const R zero = zero_like(a.at(0, 0));
    R det = one_like(a.at(0, 0));
    bool negate = false;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(a.at(r, c))) { pivot = r; break; }
        if (pivot < 0) return zero;
        if (pivot != c) {
            for (int j = c; j < n; ++j) std::swap(a.at(c, j), a.at(pivot, j));
            negate = !negate;
        }
        for (int r = c + 1; r < n; ++r) {
            if (is_zero(a.at(r, c))) continue;
            R f = a.at(r, c) / a.at(c, c);
            for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
        }
        det *= a.at(c, c);
    }
    return negate ? -det : det;
}

} // namespace permident
