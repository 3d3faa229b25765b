#include <doctest.h>

#include "permident/builders.hpp"
#include "permident/cyclotomic.hpp"
#include "permident/errors.hpp"
#include "permident/matrix.hpp"
#include "permident/permanent.hpp"
#include "permident/rng.hpp"

using namespace permident;

namespace {

SquareMatrix<Rat> random_rat_matrix(SplitMix64& rng, int n) {
    SquareMatrix<Rat> m(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = Rat(rng.uniform(-9, 9), rng.uniform(1, 5));
    return m;
}

SquareMatrix<CycloNum> random_cyclo_matrix(SplitMix64& rng, const CycloFieldPtr& f,
                                           int n) {
    SquareMatrix<CycloNum> m(n, f->zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rat> coeffs(f->degree());
            for (Rat& c : coeffs) c = Rat(rng.uniform(-3, 3), rng.uniform(1, 2));
            m.at(i, j) = CycloNum(f, std::move(coeffs));
        }
    return m;
}

// Expansion by minors along the first row; independent of the elimination
// path under test.
Rat cofactor_det(const SquareMatrix<Rat>& m) {
    const int n = m.dim();
    if (n == 1) return m.at(0, 0);
    Rat acc;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        SquareMatrix<Rat> minor(n - 1, Rat(0));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rat term = m.at(0, j) * cofactor_det(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Permutation random_permutation(SplitMix64& rng, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.uniform(0, i));
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
    }
    return Permutation(img);
}

int permutation_sign(const Permutation& p) {
    CycleDecomposition dec = CycleDecomposition::of(p);
    int transpositions = 0;
    for (const auto& cycle : dec.cycles)
        transpositions += static_cast<int>(cycle.size()) - 1;
    return transpositions % 2 == 0 ? 1 : -1;
}

} // namespace

TEST_CASE("permanent of pinned matrices") {
    SquareMatrix<Rat> x2 = SquareMatrix<Rat>::from_rows(
        {{Rat(1), Rat(-1)}, {Rat(1), Rat(1)}});
    CHECK(permanent_naive(x2) == Rat(0));
    CHECK(permanent_ryser_serial(x2) == Rat(0));
    CHECK(permanent_ryser(x2) == Rat(0));

    CHECK(permanent_naive(build_M(1)) == Rat(-10));

    SquareMatrix<Rat> id4(4, Rat(0));
    for (int i = 0; i < 4; ++i) id4.at(i, i) = Rat(1);
    CHECK(permanent_naive(id4) == Rat(1));
    CHECK(permanent_ryser(id4) == Rat(1));

    SquareMatrix<Rat> ones5(5, Rat(1));
    CHECK(permanent_ryser(ones5) == Rat(120)); // 5!
}

TEST_CASE("Ryser equals the naive oracle on random rational matrices") {
    SplitMix64 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 7; // sizes 2..8
        SquareMatrix<Rat> m = random_rat_matrix(rng, n);
        Rat expected = permanent_naive(m);
        CHECK(permanent_ryser_serial(m) == expected);
        CHECK(permanent_ryser(m) == expected);
    }
}

TEST_CASE("Ryser equals the naive oracle on random cyclotomic matrices") {
    SplitMix64 rng(171717);
    const unsigned orders[] = {3, 4, 5, 7, 8, 12};
    for (int trial = 0; trial < 20; ++trial) {
        auto f = CycloField::create(orders[trial % 6]);
        const int n = 2 + trial % 5; // sizes 2..6
        SquareMatrix<CycloNum> m = random_cyclo_matrix(rng, f, n);
        CycloNum expected = permanent_naive(m);
        CHECK(permanent_ryser_serial(m) == expected);
        CHECK(permanent_ryser(m) == expected);
    }
}

TEST_CASE("parallel Ryser is deterministic for every chunk split") {
    SplitMix64 rng(9);
    SquareMatrix<Rat> m = random_rat_matrix(rng, 7);
    Rat reference = permanent_ryser_serial(m);
    for (int chunks : {1, 2, 3, 5, 8, 16}) {
        CHECK(permanent_ryser(m, chunks) == reference);
    }
    auto f = CycloField::create(5);
    SquareMatrix<CycloNum> c = random_cyclo_matrix(rng, f, 5);
    CycloNum cref = permanent_ryser_serial(c);
    for (int chunks : {2, 3, 7}) CHECK(permanent_ryser(c, chunks) == cref);
}

TEST_CASE("permanent is invariant under row and column permutations") {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + trial % 4;
        SquareMatrix<Rat> m = random_rat_matrix(rng, n);
        Permutation rows = random_permutation(rng, n);
        Permutation cols = random_permutation(rng, n);
        Rat expected = permanent_naive(m);
        CHECK(permanent_naive(m.permute_rows(rows)) == expected);
        CHECK(permanent_naive(m.permute_cols(cols)) == expected);
        CHECK(permanent_naive(m.permute_rows(rows).permute_cols(cols)) == expected);

        Rat det = determinant(m);
        Rat row_sign = Rat(permutation_sign(rows));
        Rat col_sign = Rat(permutation_sign(cols));
        CHECK(determinant(m.permute_rows(rows)) == row_sign * det);
        CHECK(determinant(m.permute_cols(cols)) == col_sign * det);
    }
}

TEST_CASE("permanent and determinant are linear in each row") {
    SplitMix64 rng(66);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4;
        SquareMatrix<Rat> u = random_rat_matrix(rng, n);
        SquareMatrix<Rat> v = u;
        SquareMatrix<Rat> sum = u;
        const int row = static_cast<int>(rng.uniform(0, n - 1));
        for (int j = 0; j < n; ++j) {
            v.at(row, j) = Rat(rng.uniform(-9, 9), rng.uniform(1, 5));
            sum.at(row, j) = u.at(row, j) + v.at(row, j);
        }
        CHECK(permanent_naive(sum) == permanent_naive(u) + permanent_naive(v));
        CHECK(determinant(sum) == determinant(u) + determinant(v));
    }
}

TEST_CASE("determinant examples and oracle") {
    SquareMatrix<Rat> x2 = SquareMatrix<Rat>::from_rows(
        {{Rat(1), Rat(-1)}, {Rat(1), Rat(1)}});
    CHECK(determinant(x2) == Rat(2));

    SquareMatrix<Rat> singular = SquareMatrix<Rat>::from_rows({
        {Rat(1), Rat(2), Rat(3)},
        {Rat(1), Rat(2), Rat(3)},
        {Rat(4), Rat(5), Rat(6)},
    });
    CHECK(determinant(singular) == Rat(0));

    SplitMix64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        SquareMatrix<Rat> m = random_rat_matrix(rng, 6);
        CHECK(determinant(m) == cofactor_det(m));
    }

    auto f = CycloField::create(4);
    SquareMatrix<CycloNum> c(2, f->zero());
    c.at(0, 0) = f->one();
    c.at(0, 1) = f->zeta();
    c.at(1, 0) = f->zeta();
    c.at(1, 1) = f->one();
    // 1 - i^2 = 2
    CHECK(determinant(c).as_rational() == Rat(2));
}

TEST_CASE("size guards") {
    SquareMatrix<Rat> big11(11, Rat(1));
    CHECK_THROWS_AS(permanent_naive(big11), SizeGuardError);
    SquareMatrix<Rat> big25(25, Rat(1));
    CHECK_THROWS_AS(permanent_ryser(big25), SizeGuardError);
    CHECK_THROWS_AS(permanent_ryser_serial(big25), SizeGuardError);
    CHECK_THROWS_AS(SquareMatrix<Rat>(0, Rat(0)), DomainError);
}

TEST_CASE("debug text format") {
    SquareMatrix<Rat> x2 = SquareMatrix<Rat>::from_rows(
        {{Rat(1), Rat(-1)}, {Rat(1, 2), Rat(1)}});
    CHECK(x2.to_string() == "1,-1;1/2,1");
}
