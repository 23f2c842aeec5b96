#pragma once

#include <cstdint>
#include <vector>

#include "randset/rng.hpp"
#include "randset/universe.hpp"

namespace randset {

// Law of |A| for a permutation-invariant model: the cardinality law plus
// conditional uniformity determines the whole model.
class CardinalityLaw {
public:
    static CardinalityLaw point_mass(std::uint64_t k);
    static CardinalityLaw binomial(std::uint64_t n, double p);
    // weights[k] = Pr(|A| = k) for k = 0..n; must be non-negative and sum
    // to 1 within 1e-9.
    static CardinalityLaw explicit_vector(std::vector<double> weights);

    // Draws a cardinality; requires the law to fit the given universe.
    std::uint64_t draw(UniverseSize universe, Rng& rng) const;

private:
    enum class Kind { PointMass, Binomial, Explicit };
    Kind kind_;
    std::uint64_t point_k_ = 0;
    std::uint64_t binom_n_ = 0;
    double binom_p_ = 0.0;
    std::vector<double> weights_;
};

// Exact Binomial(n, p) draw: CDF inversion for n*p < 30, otherwise
// Lorentzian-envelope rejection against the log-gamma pmf.
std::uint64_t draw_binomial(std::uint64_t n, double p, Rng& rng);

// Each element included independently with probability n^(d-1); small
// inclusion probabilities use geometric gap skipping, so the cost is
// proportional to the output size.
SubsetSample sample_bernoulli(UniverseSize n, double d, SeedSpec seed);

// Uniform k-subset by Floyd's selection; O(k) expected.
SubsetSample sample_uniform(UniverseSize n, std::uint64_t k, SeedSpec seed);

// Draw K from the law, then a uniform K-subset: permutation invariant by
// construction.
SubsetSample sample_perm_invariant(UniverseSize n, const CardinalityLaw& law, SeedSpec seed);

// Image of a uniform random function from an m-point domain.
SubsetSample sample_function_image(std::uint64_t domain_size, UniverseSize n, SeedSpec seed);

} // namespace randset
