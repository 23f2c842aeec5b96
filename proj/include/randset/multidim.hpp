#pragma once

#include <cstdint>
#include <vector>

#include "randset/rng.hpp"
#include "randset/universe.hpp"

namespace randset {

// Explicit set of k-tuples with pairwise-distinct entries, stored flat
// (tuple i occupies entries [i*k, (i+1)*k)). Explicit storage is meant for
// |X| up to ~1e7; the structured families used by experiments (full E^(k),
// the star {x} x (E \ {x})) go through the closed-form helpers below.
class TupleSet {
public:
    TupleSet(UniverseSize universe, unsigned k, std::vector<Element> flat_tuples);

    UniverseSize universe() const { return universe_; }
    unsigned arity() const { return k_; }
    std::uint64_t size() const { return flat_.size() / k_; }
    const Element* tuple(std::uint64_t i) const { return flat_.data() + i * k_; }
    const std::vector<Element>& flat() const { return flat_; }

private:
    UniverseSize universe_;
    unsigned k_;
    std::vector<Element> flat_;
};

// Sizes |Y_0| .. |Y_k| of the partition of X^2 by the number of values two
// tuples share. The diagonal always lands in Y_k, so |Y_k| >= |X|, with
// equality unless distinct tuples of X carry the same value set.
struct SelfIntersectionProfile {
    unsigned k = 0;
    std::vector<std::uint64_t> sizes; // length k + 1

    // checks sum(sizes) == size_x^2 and sizes[k] >= size_x
    void validate(std::uint64_t size_x) const;
};

struct SmallSelfIntersectionReport {
    double d = 0.0;
    double alpha = 0.0;                 // log |X| / log |E^(k)|
    std::vector<double> per_i_margin;   // i = 1 .. k-1; +inf when |Y_i| = 0
    double epsilon0 = 0.0;              // min margin; +inf when no constraint
    bool holds = false;                 // epsilon0 > 0
};

// |a|(|a|-1)...(|a|-k+1); 0 when |a| < k. Throws on 64-bit overflow.
std::uint64_t induced_tuple_count(const SubsetSample& a, unsigned k);

// Partition X^2 by shared-value count via an inverted element index;
// cost is proportional to the number of value collisions, not |X|^2.
SelfIntersectionProfile self_intersection_profile(const TupleSet& x);

// Margins alpha + (d-1) i/(2k) - dens(Y_i) for i = 1..k-1, densities taken
// at fixed n with base |E^(k)| (squared for the Y_i). Condition holds iff
// the minimal margin is positive.
SmallSelfIntersectionReport small_self_intersection_check(
    const SelfIntersectionProfile& profile, std::uint64_t size_x,
    UniverseSize n, unsigned k, double d);

// Number of tuples of X whose entries all lie in a; optionally records up
// to max_witnesses tuple indices.
std::uint64_t intersect_tuples(const SubsetSample& a, const TupleSet& x,
                               std::vector<std::uint64_t>* witnesses = nullptr,
                               std::uint64_t max_witnesses = 0);

// |E^(k)| = n(n-1)...(n-k+1). Throws on 64-bit overflow.
std::uint64_t falling_factorial(std::uint64_t n, unsigned k);
double log_falling_factorial(std::uint64_t n, unsigned k);

// Closed forms for the structured families.
SelfIntersectionProfile star_self_intersection_profile(UniverseSize n);
SelfIntersectionProfile full_self_intersection_profile(UniverseSize n, unsigned k);

// |A^(2) cap ({x} x (E \ {x}))| without materializing the star.
std::uint64_t star_intersection_count(const SubsetSample& a, Element center);

// count distinct uniform tuples from E^(k), rejection on duplicates.
TupleSet sample_distinct_tuples(UniverseSize n, unsigned k, std::uint64_t count,
                                SeedSpec seed);

} // namespace randset
