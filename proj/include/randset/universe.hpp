#pragma once

#include <cstdint>
#include <vector>

namespace randset {

using Element = std::uint64_t;

// Finite universe {0, ..., n-1}. Labeled universes map through a caller-side
// bijection; permutation invariance makes the labels irrelevant.
struct UniverseSize {
    std::uint64_t n;

    explicit UniverseSize(std::uint64_t count);
    bool operator==(const UniverseSize& other) const { return n == other.n; }
};

// A density is either -infinity (empty set) or a real in [0, 1]. The
// -infinity case is an explicit variant, never a sentinel double; finite
// values are validated to [0, 1] within 1e-12 slack.
class Density {
public:
    static Density neg_infinity() { return Density(); }
    static Density of(double value);

    bool is_neg_infinity() const { return neg_inf_; }
    double value() const; // throws std::domain_error on -infinity

private:
    Density() : neg_inf_(true), value_(0.0) {}
    bool neg_inf_;
    double value_;
};

// dens(A) = log |A| / log n; 0 elements -> -infinity.
Density density_of(std::uint64_t cardinality, UniverseSize universe);

// codens = 1 - dens; undefined for -infinity.
Density codensity(Density d);

// Immutable realized subset: strictly increasing member ids in [0, n).
class SubsetSample {
public:
    SubsetSample(UniverseSize universe, std::vector<Element> sorted_members);

    const UniverseSize& universe() const { return universe_; }
    const std::vector<Element>& members() const { return members_; }
    std::uint64_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Element x) const;

    Density density() const { return density_of(size(), universe_); }

private:
    UniverseSize universe_;
    std::vector<Element> members_;
};

SubsetSample intersect(const SubsetSample& a, const SubsetSample& b);
SubsetSample unite(const SubsetSample& a, const SubsetSample& b);
SubsetSample complement(const SubsetSample& a);

} // namespace randset
