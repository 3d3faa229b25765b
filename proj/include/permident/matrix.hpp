#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permident/errors.hpp"
#include "permident/permutation.hpp"

namespace permident {

// Dense N x N matrix over an exact commutative ring. Entries are stored
// row-major; indices are 0-based. Instances are immutable in all engine
// code paths (permanent/determinant copy what they mutate).
template <class R>
class SquareMatrix {
public:
    SquareMatrix(int dim, const R& fill)
        : n_(dim), e_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), fill) {
        if (dim < 1) throw DomainError("matrix dimension must be >= 1");
    }

    static SquareMatrix from_rows(const std::vector<std::vector<R>>& rows) {
        const int n = static_cast<int>(rows.size());
        if (n < 1) throw DomainError("matrix dimension must be >= 1");
        SquareMatrix m(n, rows[0][0]);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
                throw DomainError("matrix rows must all have length N");
            for (int j = 0; j < n; ++j)
                m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    int dim() const { return n_; }

    R& at(int i, int j) {
        return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
    }
    const R& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    // Rows rearranged so row i of the result is row sigma(i) of the input.
    SquareMatrix permute_rows(const Permutation& sigma) const {
        SquareMatrix out(*this);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                out.at(i, j) = at(sigma(i + 1) - 1, j);
        return out;
    }

    SquareMatrix permute_cols(const Permutation& sigma) const {
        SquareMatrix out(*this);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                out.at(i, j) = at(i, sigma(j + 1) - 1);
        return out;
    }

    // Debug format: rows joined by ';', entries by ','.
    std::string to_string() const {
        std::string out;
        for (int i = 0; i < n_; ++i) {
            if (i) out += ";";
            for (int j = 0; j < n_; ++j) {
                if (j) out += ",";
                out += at(i, j).to_string();
            }
        }
        return out;
    }

private:
    int n_;
    std::vector<R> e_;
};

} // namespace permident
