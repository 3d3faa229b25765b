#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permident/errors.hpp"

namespace permident {

// Enumeration guards: N! streams stop at 12, pair partitions at 20. Chosen
// so worst-case desk runs stay bounded; violations throw SizeGuard instead
// of hanging.
inline constexpr int kMaxPermutationStreamSize = 12;
inline constexpr int kMaxPairPartitionSize = 20;

// A bijection of {1..N}, stored as its one-based image list.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    // tau(j) for one-based j.
    int operator()(int j) const { return img_[static_cast<std::size_t>(j) - 1]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    std::vector<int> fixed_points() const; // Fix(tau), sorted
    std::vector<int> moved_points() const; // D(tau), sorted

    Permutation inverse() const;
    // (a.compose(b))(j) = a(b(j))
    Permutation compose(const Permutation& other) const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.img_ == b.img_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return a.img_ != b.img_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.img_ < b.img_;
    }

    // "[2,1,4,3]"
    std::string to_string() const;
    // Accepts the image-list form "[2,1,4,3]" or cycle notation
    // "(1 2)(3 4)"; the latter needs the ambient size n.
    static Permutation parse(std::string_view text, int n = -1);

private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : img_(std::move(images)) {}

    std::vector<int> img_;

    template <class F> friend void for_each_permutation(int n, F&& f);
    template <class F> friend void for_each_k_cycle(int n, int k, F&& f);
};

// Disjoint-cycle form: cycles of length >= 2 (each rotated to start at its
// smallest point, listed by smallest point) plus the sorted fixed points.
// Cycles and fixed points jointly partition {1..N}.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
    std::vector<int> fixed;

    static CycleDecomposition of(const Permutation& tau);
    Permutation recompose(int n) const;
    bool all_cycles_even() const;
};

struct PairPartition {
    // Each pair (a, b) with a < b; pairs listed by first element.
    std::vector<std::pair<int, int>> pairs;

    // True when the pairs are disjoint and cover {1..n} exactly.
    bool covers(int n) const;
};

namespace detail {

inline void check_stream_size(int n, int limit, const char* what) {
    if (n < 1) throw DomainError(std::string(what) + " requires N >= 1");
    if (n > limit)
        throw SizeGuardError(std::string(what) + " limited to N <= " +
                             std::to_string(limit) + ", got N = " + std::to_string(n));
}

} // namespace detail

// All N! permutations in lexicographic order of their image lists.
template <class F>
void for_each_permutation(int n, F&& f) {
    detail::check_stream_size(n, kMaxPermutationStreamSize, "all_permutations");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    do {
        f(Permutation(img, Permutation::Unchecked{}));
    } while (std::next_permutation(img.begin(), img.end()));
}

// Fixed-point-free permutations, in image-lex order.
template <class F>
void for_each_derangement(int n, F&& f) {
    detail::check_stream_size(n, kMaxPermutationStreamSize, "derangements");
    for_each_permutation(n, [&](const Permutation& tau) {
        for (int j = 1; j <= n; ++j)
            if (tau(j) == j) return;
        f(tau);
    });
}

// Single k-cycles on {1..N} (all other points fixed). Enumerated by support
// subset (lexicographic), then by the arrangement of the non-anchor points.
// Count: C(N,k) * (k-1)!.
template <class F>
void for_each_k_cycle(int n, int k, F&& f) {
    detail::check_stream_size(n, kMaxPermutationStreamSize, "k_cycles");
    if (k < 2 || k > n)
        throw DomainError("k_cycles requires 2 <= k <= N, got k = " + std::to_string(k) +
                          ", N = " + std::to_string(n));
    std::vector<int> support(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) support[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        std::vector<int> rest(support.begin() + 1, support.end());
        do {
            std::vector<int> img(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
            int prev = support[0];
            for (int r : rest) {
                img[static_cast<std::size_t>(prev) - 1] = r;
                prev = r;
            }
            img[static_cast<std::size_t>(prev) - 1] = support[0];
            f(Permutation(std::move(img), Permutation::Unchecked{}));
        } while (std::next_permutation(rest.begin(), rest.end()));

        // Advance the support subset.
        int i = k - 1;
        while (i >= 0 && support[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++support[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            support[static_cast<std::size_t>(j)] = support[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Non-identity permutations whose nontrivial cycles all have even length
// (fixed points allowed), in image-lex order.
template <class F>
void for_each_even_cycle_perm(int n, F&& f) {
    detail::check_stream_size(n, kMaxPermutationStreamSize, "even_cycle_perms");
    if (n % 2 != 0)
        throw DomainError("even_cycle_perms requires even N, got " + std::to_string(n));
    std::vector<char> seen(static_cast<std::size_t>(n) + 1);
    for_each_permutation(n, [&](const Permutation& tau) {
        std::fill(seen.begin(), seen.end(), 0);
        bool moved_any = false;
        for (int j = 1; j <= n; ++j) {
            if (seen[static_cast<std::size_t>(j)] || tau(j) == j) continue;
            moved_any = true;
            int len = 0;
            int cur = j;
            do {
                seen[static_cast<std::size_t>(cur)] = 1;
                cur = tau(cur);
                ++len;
            } while (cur != j);
            if (len % 2 != 0) return;
        }
        if (moved_any) f(tau);
    });
}

// All (N-1)!! partitions of {1..N} into unordered pairs. The smallest
// unpaired element anchors each pair, so the order is canonical.
template <class F>
void for_each_pair_partition(int n, F&& f) {
    if (n < 1) throw DomainError("pair_partitions requires N >= 1");
    if (n % 2 != 0)
        throw DomainError("pair_partitions requires even N, got " + std::to_string(n));
    if (n > kMaxPairPartitionSize)
        throw SizeGuardError("pair_partitions limited to N <= " +
                             std::to_string(kMaxPairPartitionSize) + ", got N = " +
                             std::to_string(n));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    PairPartition part;
    part.pairs.reserve(static_cast<std::size_t>(n) / 2);

    auto recurse = [&](auto&& self) -> void {
        int a = 1;
        while (a <= n && used[static_cast<std::size_t>(a)]) ++a;
        if (a > n) {
            f(part);
            return;
        }
        used[static_cast<std::size_t>(a)] = 1;
        for (int b = a + 1; b <= n; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(b)] = 1;
            part.pairs.emplace_back(a, b);
            self(self);
            part.pairs.pop_back();
            used[static_cast<std::size_t>(b)] = 0;
        }
        used[static_cast<std::size_t>(a)] = 0;
    };
    recurse(recurse);
}

} // namespace permident
