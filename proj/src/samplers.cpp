#include "randset/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace randset {

CardinalityLaw CardinalityLaw::point_mass(std::uint64_t k) {
    CardinalityLaw law;
    law.kind_ = Kind::PointMass;
    law.point_k_ = k;
    return law;
}

CardinalityLaw CardinalityLaw::binomial(std::uint64_t n, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("CardinalityLaw::binomial: p outside [0, 1]");
    CardinalityLaw law;
    law.kind_ = Kind::Binomial;
    law.binom_n_ = n;
    law.binom_p_ = p;
    return law;
}

CardinalityLaw CardinalityLaw::explicit_vector(std::vector<double> weights) {
    if (weights.empty())
        throw std::domain_error("CardinalityLaw::explicit_vector: empty weights");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::domain_error("CardinalityLaw: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::domain_error("CardinalityLaw: weights must sum to 1");
    CardinalityLaw law;
    law.kind_ = Kind::Explicit;
    law.weights_ = std::move(weights);
    return law;
}

std::uint64_t CardinalityLaw::draw(UniverseSize universe, Rng& rng) const {
    switch (kind_) {
    case Kind::PointMass:
        if (point_k_ > universe.n)
            throw std::domain_error("CardinalityLaw: point mass exceeds universe");
        return point_k_;
    case Kind::Binomial:
        if (binom_n_ > universe.n)
            throw std::domain_error("CardinalityLaw: binomial n exceeds universe");
        return draw_binomial(binom_n_, binom_p_, rng);
    case Kind::Explicit: {
        if (weights_.size() > universe.n + 1)
            throw std::domain_error("CardinalityLaw: weights extend past universe");
        double u = rng.next_double();
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            u -= weights_[k];
            if (u < 0.0) return k;
        }
        return weights_.size() - 1; // rounding leftover lands on the top atom
    }
    }
    throw std::logic_error("CardinalityLaw: unreachable");
}

namespace {

std::uint64_t binomial_by_inversion(std::uint64_t n, double p, Rng& rng) {
    // walk the pmf from k = 0; expected work O(np), and pmf(0) = q^n stays
    // above e^-45 whenever np < 30
    const double q = 1.0 - p;
    double pmf = std::exp(static_cast<double>(n) * std::log1p(-p));
    double u = rng.next_double();
    std::uint64_t k = 0;
    double cdf = pmf;
    while (u > cdf && k < n) {
        ++k;
        pmf *= (static_cast<double>(n - k + 1) / static_cast<double>(k)) * (p / q);
        cdf += pmf;
    }
    return k;
}

double log_factorial(double x) { return std::lgamma(x + 1.0); }

// Rejection from a Lorentzian comparison function around the mode
// (Numerical Recipes' large-mean binomial deviate).
std::uint64_t binomial_by_rejection(std::uint64_t n, double p, Rng& rng) {
    const double nd = static_cast<double>(n);
    const double mean = nd * p;
    const double plog = std::log(p);
    const double qlog = std::log(1.0 - p);
    const double sq = std::sqrt(2.0 * mean * (1.0 - p));
    const double lgn = log_factorial(nd);
    for (;;) {
        double em;
        double y;
        do {
            const double angle = 3.14159265358979323846 * rng.next_double();
            y = std::tan(angle);
            em = sq * y + mean;
        } while (em < 0.0 || em >= nd + 1.0);
        em = std::floor(em);
        const double t = 1.2 * sq * (1.0 + y * y) *
                         std::exp(lgn - log_factorial(em) - log_factorial(nd - em) +
                                  em * plog + (nd - em) * qlog);
        if (rng.next_double() <= t) return static_cast<std::uint64_t>(em);
    }
}

} // namespace

std::uint64_t draw_binomial(std::uint64_t n, double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("draw_binomial: p outside [0, 1]");
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;
    if (p > 0.5) return n - draw_binomial(n, 1.0 - p, rng);
    const double np = static_cast<double>(n) * p;
    return np < 30.0 ? binomial_by_inversion(n, p, rng) : binomial_by_rejection(n, p, rng);
}

SubsetSample sample_bernoulli(UniverseSize n, double d, SeedSpec seed) {
    if (d > 1.0) throw std::domain_error("sample_bernoulli: density above 1");
    Rng rng(seed);
    const double p = std::pow(static_cast<double>(n.n), d - 1.0);
    std::vector<Element> members;
    if (p >= 1.0) {
        members.resize(n.n);
        for (std::uint64_t i = 0; i < n.n; ++i) members[i] = i;
        return {n, std::move(members)};
    }
    if (p <= 0.0) return {n, {}};
    // gap G between successes is geometric: G = floor(ln U / ln(1-p))
    const double log_q = std::log1p(-p);
    double pos = -1.0;
    for (;;) {
        const double u = 1.0 - rng.next_double(); // (0, 1]
        pos += 1.0 + std::floor(std::log(u) / log_q);
        if (pos >= static_cast<double>(n.n)) break;
        members.push_back(static_cast<Element>(pos));
    }
    return {n, std::move(members)};
}

namespace {

std::vector<Element> floyd_subset(std::uint64_t n, std::uint64_t k, Rng& rng) {
    std::unordered_set<Element> chosen;
    chosen.reserve(static_cast<std::size_t>(k) * 2);
    for (std::uint64_t j = n - k; j < n; ++j) {
        const Element t = rng.below(j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<Element> members(chosen.begin(), chosen.end());
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace

SubsetSample sample_uniform(UniverseSize n, std::uint64_t k, SeedSpec seed) {
    if (k > n.n) throw std::domain_error("sample_uniform: k exceeds universe size");
    Rng rng(seed);
    if (k == 0) return {n, {}};
    return {n, floyd_subset(n.n, k, rng)};
}

SubsetSample sample_perm_invariant(UniverseSize n, const CardinalityLaw& law, SeedSpec seed) {
    Rng rng(seed);
    const std::uint64_t k = law.draw(n, rng);
    if (k > n.n) throw std::domain_error("sample_perm_invariant: drawn cardinality exceeds n");
    if (k == 0) return {n, {}};
    return {n, floyd_subset(n.n, k, rng)};
}

SubsetSample sample_function_image(std::uint64_t domain_size, UniverseSize n, SeedSpec seed) {
    if (domain_size < 1) throw std::domain_error("sample_function_image: empty domain");
    Rng rng(seed);
    std::vector<Element> values(domain_size);
    for (auto& v : values) v = rng.below(n.n);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return {n, std::move(values)};
}

} // namespace randset
