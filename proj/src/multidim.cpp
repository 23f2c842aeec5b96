#include "randset/multidim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace randset {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("tuple count exceeds 64 bits");
    return static_cast<std::uint64_t>(p);
}

std::uint64_t pack_tuple_hash(const Element* t, unsigned k) {
    std::uint64_t h = 0x243F6A8885A308D3ULL;
    for (unsigned j = 0; j < k; ++j) {
        h ^= t[j] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h *= 0xFF51AFD7ED558CCDULL;
        h ^= h >> 33;
    }
    return h;
}

} // namespace

TupleSet::TupleSet(UniverseSize universe, unsigned k, std::vector<Element> flat_tuples)
    : universe_(universe), k_(k), flat_(std::move(flat_tuples)) {
    if (k_ < 1) throw std::domain_error("TupleSet: arity must be >= 1");
    if (flat_.size() % k_ != 0)
        throw std::domain_error("TupleSet: flat storage not a multiple of arity");
    const std::uint64_t count = flat_.size() / k_;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(count) * 2);
    for (std::uint64_t i = 0; i < count; ++i) {
        const Element* t = tuple(i);
        for (unsigned a = 0; a < k_; ++a) {
            if (t[a] >= universe_.n)
                throw std::domain_error("TupleSet: entry outside universe");
            for (unsigned b = a + 1; b < k_; ++b)
                if (t[a] == t[b])
                    throw std::domain_error("TupleSet: tuple entries must be pairwise distinct");
        }
        if (!seen.insert(pack_tuple_hash(t, k_)).second) {
            // hash hit: confirm a true duplicate before rejecting
            for (std::uint64_t j = 0; j < i; ++j)
                if (std::equal(t, t + k_, tuple(j)))
                    throw std::domain_error("TupleSet: duplicate tuple");
        }
    }
}

void SelfIntersectionProfile::validate(std::uint64_t size_x) const {
    if (sizes.size() != k + 1)
        throw std::domain_error("SelfIntersectionProfile: need k + 1 class sizes");
    std::uint64_t sum = 0;
    for (std::uint64_t s : sizes) sum += s;
    if (sum != checked_mul(size_x, size_x))
        throw std::domain_error("SelfIntersectionProfile: sizes do not sum to |X|^2");
    if (sizes[k] < size_x)
        throw std::domain_error("SelfIntersectionProfile: Y_k must contain the diagonal");
}

std::uint64_t induced_tuple_count(const SubsetSample& a, unsigned k) {
    if (k < 1) throw std::domain_error("induced_tuple_count: arity must be >= 1");
    return falling_factorial(a.size(), k);
}

std::uint64_t falling_factorial(std::uint64_t n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t out = 1;
    for (unsigned i = 0; i < k; ++i) out = checked_mul(out, n - i);
    return out;
}

double log_falling_factorial(std::uint64_t n, unsigned k) {
    if (k > n) return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (unsigned i = 0; i < k; ++i) s += std::log(static_cast<double>(n - i));
    return s;
}

SelfIntersectionProfile self_intersection_profile(const TupleSet& x) {
    const unsigned k = x.arity();
    const std::uint64_t count = x.size();
    SelfIntersectionProfile profile;
    profile.k = k;
    profile.sizes.assign(k + 1, 0);

    // inverted index: element value -> tuples containing it (keyed by hash
    // map; the universe can be far larger than the support of X)
    std::unordered_map<Element, std::vector<std::uint32_t>> occurrences;
    occurrences.reserve(static_cast<std::size_t>(count) * k);
    for (std::uint64_t i = 0; i < count; ++i) {
        const Element* t = x.tuple(i);
        for (unsigned j = 0; j < k; ++j)
            occurrences[t[j]].push_back(static_cast<std::uint32_t>(i));
    }

    // per-tuple shared-value counts, epoch-stamped to avoid clearing
    std::vector<std::uint32_t> stamp(count, 0);
    std::vector<std::uint8_t> shared(count, 0);
    std::uint32_t epoch = 0;
    std::vector<std::uint32_t> touched;
    std::uint64_t nonzero_pairs = 0;

    for (std::uint64_t i = 0; i < count; ++i) {
        ++epoch;
        touched.clear();
        const Element* t = x.tuple(i);
        for (unsigned j = 0; j < k; ++j) {
            for (std::uint32_t other : occurrences.find(t[j])->second) {
                if (stamp[other] != epoch) {
                    stamp[other] = epoch;
                    shared[other] = 0;
                    touched.push_back(other);
                }
                ++shared[other];
            }
        }
        for (std::uint32_t other : touched) {
            ++profile.sizes[shared[other]];
            ++nonzero_pairs;
        }
    }
    profile.sizes[0] = checked_mul(count, count) - nonzero_pairs;
    return profile;
}

SmallSelfIntersectionReport small_self_intersection_check(
    const SelfIntersectionProfile& profile, std::uint64_t size_x,
    UniverseSize n, unsigned k, double d) {
    if (!(d > 0.0 && d < 1.0))
        throw std::domain_error("small_self_intersection_check: d must be in (0, 1)");
    if (size_x < 1)
        throw std::domain_error("small_self_intersection_check: empty X");
    profile.validate(size_x);
    if (profile.k != k)
        throw std::domain_error("small_self_intersection_check: arity mismatch");

    const double log_ek = log_falling_factorial(n.n, k);
    const double inf = std::numeric_limits<double>::infinity();
    SmallSelfIntersectionReport report;
    report.d = d;
    report.alpha = std::log(static_cast<double>(size_x)) / log_ek;
    report.epsilon0 = inf;
    for (unsigned i = 1; i < k; ++i) {
        double margin = inf; // empty classes have density -infinity
        if (profile.sizes[i] > 0) {
            const double dens_yi =
                std::log(static_cast<double>(profile.sizes[i])) / (2.0 * log_ek);
            margin = report.alpha + (d - 1.0) * static_cast<double>(i) /
                         (2.0 * static_cast<double>(k)) - dens_yi;
        }
        report.per_i_margin.push_back(margin);
        report.epsilon0 = std::min(report.epsilon0, margin);
    }
    report.holds = report.epsilon0 > 0.0;
    return report;
}

std::uint64_t intersect_tuples(const SubsetSample& a, const TupleSet& x,
                               std::vector<std::uint64_t>* witnesses,
                               std::uint64_t max_witnesses) {
    if (!(a.universe() == x.universe()))
        throw std::domain_error("intersect_tuples: universe mismatch");
    std::vector<bool> in_a(a.universe().n, false);
    for (Element e : a.members()) in_a[e] = true;
    const unsigned k = x.arity();
    std::uint64_t count = 0;
    for (std::uint64_t i = 0, total = x.size(); i < total; ++i) {
        const Element* t = x.tuple(i);
        bool all = true;
        for (unsigned j = 0; j < k; ++j) {
            if (!in_a[t[j]]) {
                all = false;
                break;
            }
        }
        if (all) {
            ++count;
            if (witnesses && witnesses->size() < max_witnesses) witnesses->push_back(i);
        }
    }
    return count;
}

SelfIntersectionProfile star_self_intersection_profile(UniverseSize n) {
    // X = {x} x (E \ {x}): every pair shares the center
    SelfIntersectionProfile profile;
    profile.k = 2;
    profile.sizes = {0, checked_mul(n.n - 1, n.n - 2), n.n - 1};
    return profile;
}

SelfIntersectionProfile full_self_intersection_profile(UniverseSize n, unsigned k) {
    // tuples y sharing exactly i values with a fixed x: C(k,i) value choices,
    // C(k,i) i! placements, remaining slots filled injectively from outside
    SelfIntersectionProfile profile;
    profile.k = k;
    profile.sizes.assign(k + 1, 0);
    const std::uint64_t size_x = falling_factorial(n.n, k);
    for (unsigned i = 0; i <= k; ++i) {
        std::uint64_t choose = 1;
        for (unsigned j = 0; j < i; ++j) choose = choose * (k - j) / (j + 1);
        std::uint64_t per_x = checked_mul(choose, choose);
        for (unsigned j = 1; j <= i; ++j) per_x = checked_mul(per_x, j);
        per_x = checked_mul(per_x, falling_factorial(n.n - k, k - i));
        profile.sizes[i] = checked_mul(size_x, per_x);
    }
    return profile;
}

std::uint64_t star_intersection_count(const SubsetSample& a, Element center) {
    if (center >= a.universe().n)
        throw std::domain_error("star_intersection_count: center outside universe");
    if (!a.contains(center)) return 0;
    return a.size() - 1;
}

TupleSet sample_distinct_tuples(UniverseSize n, unsigned k, std::uint64_t count,
                                SeedSpec seed) {
    if (k < 1) throw std::domain_error("sample_distinct_tuples: arity must be >= 1");
    const double log_total = log_falling_factorial(n.n, k);
    if (std::log(static_cast<double>(count)) > log_total)
        throw std::domain_error("sample_distinct_tuples: count exceeds |E^(k)|");
    Rng rng(seed);
    std::vector<Element> flat;
    flat.reserve(static_cast<std::size_t>(count) * k);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(count) * 2);
    std::vector<Element> tup(k);
    std::uint64_t accepted = 0;
    while (accepted < count) {
        for (unsigned j = 0; j < k; ++j) {
            bool fresh;
            do {
                tup[j] = rng.below(n.n);
                fresh = true;
                for (unsigned b = 0; b < j; ++b)
                    if (tup[b] == tup[j]) fresh = false;
            } while (!fresh);
        }
        if (!seen.insert(pack_tuple_hash(tup.data(), k)).second) continue;
        flat.insert(flat.end(), tup.begin(), tup.end());
        ++accepted;
    }
    return {n, k, std::move(flat)};
}

} // namespace randset
