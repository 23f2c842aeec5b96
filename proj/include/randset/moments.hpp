#pragma once

#include <cstdint>
#include <vector>

#include "randset/multidim.hpp"
#include "randset/universe.hpp"

namespace randset {

struct MomentPair {
    double mean = 0.0;
    double variance = 0.0;
};

// Pr({x_1,...,x_r} subset of A) for a uniform k-subset A of an n-universe:
// the falling-factorial ratio prod_{i<r} (k-i)/(n-i). Evaluated in log
// space for r > 20. r > k gives 0.
double uniform_inclusion_prob(UniverseSize n, std::uint64_t k, unsigned r);
double uniform_inclusion_log_prob(UniverseSize n, std::uint64_t k, unsigned r);

// Exact reduced fraction, offered for oracle use at n <= 64.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};
Fraction uniform_inclusion_prob_rational(UniverseSize n, std::uint64_t k, unsigned r);

// |A cap B| for independent uniform kA- and kB-subsets:
//   mean = kA kB / n
//   var  = kA kB (n^2 - n kA - n kB + kA kB) / (n^2 (n-1))
MomentPair intersection_moments_uniform(UniverseSize n, std::uint64_t ka, std::uint64_t kb);

// |A| for Bernoulli sampling with p = n^(d-1): mean n^d, variance np(1-p).
MomentPair bernoulli_moments(UniverseSize n, double d);

// |A| for any permutation-invariant A from the pair probabilities:
//   mean = n p1,  var = mean + n(n-1) p2 - mean^2.
MomentPair perm_invariant_moments(UniverseSize n, double p1, double p2);

// |A^(k) cap X| from the self-intersection profile of X and the inclusion
// probabilities P_r = Pr({x_1,...,x_r} subset of A). inclusion_probs[r]
// must be filled for r = k, 2k-i (i = 1..k) and 2k.
MomentPair multidim_moments(const SelfIntersectionProfile& profile, std::uint64_t size_x,
                            const std::vector<double>& inclusion_probs, unsigned k);

// Uniform-model convenience: P_r from uniform_inclusion_prob(n, kA, r).
MomentPair multidim_moments_uniform(const SelfIntersectionProfile& profile,
                                    std::uint64_t size_x, UniverseSize n,
                                    std::uint64_t ka, unsigned k);

// Closed-form bound evaluators for the concentration and inclusion lemmas,
// with the minimal n at which each applies.
namespace bounds {

// Pr(| |A cap B| - n^(a+b-1) | > c n^(a+b-1)) <= 12 / (c^2 n^(a+b-1))
double intersection_tail(double c, UniverseSize n, double alpha, double beta);
double intersection_tail_min_n(double c, double alpha, double beta); // (4/c)^(1/(a+b-1))

// n^(r(d-1-eps)) <= Pr({x_1..x_r} in A) <= n^(r(d-1+eps)), valid for
// n >= (1+2k)^(1/eps), r <= 2k.
double inclusion_lower(UniverseSize n, double d, double eps, unsigned r);
double inclusion_upper(UniverseSize n, double d, double eps, unsigned r);
double inclusion_min_n(unsigned k, double eps);

// Pr_k^2 - Pr_2k <= n^(2k(d-1+eps)-d) under the same threshold.
double square_gap_upper(UniverseSize n, double d, double eps, unsigned k);

// Checks the sandwich on the exact probability at cardinality floor(n^d).
bool inclusion_sandwich_holds(UniverseSize n, double d, double eps, unsigned r, unsigned k);

} // namespace bounds

} // namespace randset
