#include "randset/universe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randset {

UniverseSize::UniverseSize(std::uint64_t count) : n(count) {
    if (count < 2) throw std::domain_error("UniverseSize: need n >= 2 (log base must exceed 1)");
}

Density Density::of(double value) {
    constexpr double slack = 1e-12;
    if (!(value >= -slack && value <= 1.0 + slack))
        throw std::domain_error("Density: finite value outside [0, 1]");
    Density d;
    d.neg_inf_ = false;
    d.value_ = std::min(1.0, std::max(0.0, value));
    return d;
}

double Density::value() const {
    if (neg_inf_) throw std::domain_error("Density: value() on -infinity");
    return value_;
}

Density density_of(std::uint64_t cardinality, UniverseSize universe) {
    if (cardinality > universe.n)
        throw std::domain_error("density_of: cardinality exceeds universe size");
    if (cardinality == 0) return Density::neg_infinity();
    return Density::of(std::log(static_cast<double>(cardinality)) /
                       std::log(static_cast<double>(universe.n)));
}

Density codensity(Density d) {
    if (d.is_neg_infinity())
        throw std::domain_error("codensity: undefined for -infinity");
    return Density::of(1.0 - d.value());
}

SubsetSample::SubsetSample(UniverseSize universe, std::vector<Element> sorted_members)
    : universe_(universe), members_(std::move(sorted_members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] >= universe_.n)
            throw std::domain_error("SubsetSample: member outside universe");
        if (i > 0 && members_[i] <= members_[i - 1])
            throw std::domain_error("SubsetSample: members must be strictly increasing");
    }
}

bool SubsetSample::contains(Element x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
}

namespace {
void require_same_universe(const SubsetSample& a, const SubsetSample& b) {
    if (!(a.universe() == b.universe()))
        throw std::domain_error("set operation: universe mismatch");
}
} // namespace

SubsetSample intersect(const SubsetSample& a, const SubsetSample& b) {
    require_same_universe(a, b);
    std::vector<Element> out;
    std::set_intersection(a.members().begin(), a.members().end(),
                          b.members().begin(), b.members().end(),
                          std::back_inserter(out));
    return {a.universe(), std::move(out)};
}

SubsetSample unite(const SubsetSample& a, const SubsetSample& b) {
    require_same_universe(a, b);
    std::vector<Element> out;
    std::set_union(a.members().begin(), a.members().end(),
                   b.members().begin(), b.members().end(),
                   std::back_inserter(out));
    return {a.universe(), std::move(out)};
}

SubsetSample complement(const SubsetSample& a) {
    std::vector<Element> out;
    out.reserve(a.universe().n - a.size());
    auto it = a.members().begin();
    for (Element x = 0; x < a.universe().n; ++x) {
        if (it != a.members().end() && *it == x) {
            ++it;
        } else {
            out.push_back(x);
        }
    }
    return {a.universe(), std::move(out)};
}

} // namespace randset
