#pragma once

#include <cstdint>
#include <vector>

#include "permident/builders.hpp"
#include "permident/permutation.hpp"
#include "permident/rational.hpp"
#include "permident/rng.hpp"
#include "permident/verdict.hpp"

namespace permident {

enum class PermanentEngine { automatic, naive, ryser };

// Product of (x_j + x_{tau(j)}) / (x_j - x_{tau(j)}) over the moved points
// of tau; the empty product is 1.
Rat f_weight(const Permutation& tau, const PointVector& xs);

// Permanent of the (x_j + x_k)/(x_j - x_k) matrix at the given points.
// automatic routes through the Ryser engine; naive is the N <= 10 oracle.
Rat S_by_definition(const PointVector& xs,
                    PermanentEngine engine = PermanentEngine::automatic);

// Matching-sum form: (-4)^n x_1...x_{2n} * sum over pair partitions of
// prod 1/(x_i - x_j)^2.
Rat S_by_matching(const PointVector& xs);

// Sum of f over all full-length cycles of S_{2n}; constant for 2n >= 4.
Rat s_by_cycles(const PointVector& xs);

// Permanent of the (j+k)/(j-k) matrix over indices 0..2n.
Rat rn(int n);

// (-1)^n T_n, the constant value of s at 2n points for n >= 2.
Rat signed_tangent(int n);

// Draws `count` pairwise-distinct nonzero rationals with numerators in
// [-99, 99] and denominators in [1, 9], resampling on collisions. When
// 0 <= zero_at < count, that coordinate is the exact zero instead.
PointVector sample_points(SplitMix64& rng, int count, int zero_at = -1);

std::vector<VerdictRecord> verify_theorem1(int n, int trials, std::uint64_t seed);
std::vector<VerdictRecord> verify_vanishing(int n, int trials, std::uint64_t seed);
std::vector<VerdictRecord> verify_theorem2(int n, int trials, std::uint64_t seed,
                                           bool force = false);
std::vector<VerdictRecord> verify_recurrence(int n_max);
std::vector<VerdictRecord> verify_perA(int n_max);
std::vector<VerdictRecord> verify_theorem3_per_det(int n, int trials, std::uint64_t seed);
std::vector<VerdictRecord> verify_even_cycle_expansion(int n, int trials,
                                                       std::uint64_t seed);
VerdictRecord verify_cyclotomic_even(int n);
VerdictRecord verify_cyclotomic_odd(int n);
std::vector<VerdictRecord> verify_cycle_lemma(int n_points, int trials,
                                              std::uint64_t seed);
VerdictRecord verify_derangement_sums(int n);
std::vector<VerdictRecord> verify_wang_sun_det(int n);
VerdictRecord verify_sun_congruence(int p);

} // namespace permident
