#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "oracles.hpp"
#include "randset/moments.hpp"
#include "randset/multidim.hpp"
#include "randset/samplers.hpp"

using namespace randset;

TEST_CASE("induced tuple count") {
    const UniverseSize n(10);
    CHECK(induced_tuple_count(SubsetSample(n, {0, 2, 4, 6, 8}), 2) == 20);
    CHECK(induced_tuple_count(SubsetSample(n, {3}), 2) == 0);
    std::vector<Element> all;
    for (Element i = 0; i < 10; ++i) all.push_back(i);
    CHECK(induced_tuple_count(SubsetSample(n, all), 1) == 10);
}

TEST_CASE("tuple set validation") {
    const UniverseSize n(6);
    CHECK_THROWS_AS(TupleSet(n, 2, {0, 0}), std::domain_error);
    CHECK_THROWS_AS(TupleSet(n, 2, {0, 6}), std::domain_error);
    CHECK_THROWS_AS(TupleSet(n, 2, {0, 1, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(TupleSet(n, 2, {0, 1, 2}), std::domain_error);
}

TEST_CASE("self-intersection profile matches the quadratic oracle") {
    const UniverseSize n(12);
    // structured: the star {0} x (1..7) inside a 12-universe
    std::vector<Element> star_flat;
    for (Element e = 1; e <= 7; ++e) {
        star_flat.push_back(0);
        star_flat.push_back(e);
    }
    const TupleSet star(n, 2, star_flat);
    const auto star_profile = self_intersection_profile(star);
    CHECK(star_profile.sizes == oracles::brute_profile(star));
    CHECK(star_profile.sizes == std::vector<std::uint64_t>{0, 42, 7});

    // two disjoint-support tuples
    const TupleSet disjoint(n, 2, {0, 1, 2, 3});
    CHECK(self_intersection_profile(disjoint).sizes == std::vector<std::uint64_t>{2, 0, 2});

    // random sets at arity 2 and 3
    for (unsigned k : {2u, 3u}) {
        const TupleSet x = sample_distinct_tuples(n, k, 40, {k, 99});
        const auto profile = self_intersection_profile(x);
        CHECK(profile.sizes == oracles::brute_profile(x));
        profile.validate(x.size());
    }
}

TEST_CASE("profile of the full pair set counts value-sharing pairs") {
    // pairs (x, y) sharing both values include both the diagonal and the
    // swapped pairs, so Y_2 is twice the diagonal here
    const UniverseSize n(4);
    std::vector<Element> flat;
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b)
            if (a != b) {
                flat.push_back(a);
                flat.push_back(b);
            }
    const TupleSet full(n, 2, flat);
    CHECK(full.size() == 12);
    const auto profile = self_intersection_profile(full);
    CHECK(profile.sizes == oracles::brute_profile(full));
    CHECK(profile.sizes == std::vector<std::uint64_t>{24, 96, 24});
    CHECK(profile.sizes == full_self_intersection_profile(n, 2).sizes);
    profile.validate(12);
}

TEST_CASE("closed-form star profile") {
    const auto profile = star_self_intersection_profile(UniverseSize(100));
    CHECK(profile.sizes == std::vector<std::uint64_t>{0, 99 * 98, 99});
}

TEST_CASE("small self-intersection check fails on the star at d = 3/4") {
    const UniverseSize n(10000);
    const auto profile = star_self_intersection_profile(n);
    const auto report = small_self_intersection_check(profile, n.n - 1, n, 2, 0.75);
    CHECK_FALSE(report.holds);
    CHECK(report.epsilon0 < 0.0);
    CHECK(report.alpha == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(report.epsilon0 == doctest::Approx(-0.0625).epsilon(0.05));
}

TEST_CASE("small self-intersection check holds on the full pair set") {
    const UniverseSize n(100);
    const auto profile = full_self_intersection_profile(n, 2);
    const std::uint64_t size_x = falling_factorial(100, 2);
    const auto report = small_self_intersection_check(profile, size_x, n, 2, 0.5);
    CHECK(report.holds);
    CHECK(report.alpha == doctest::Approx(1.0));
}

TEST_CASE("empty middle classes give an infinite margin") {
    const UniverseSize n(12);
    const TupleSet disjoint(n, 2, {0, 1, 2, 3});
    const auto profile = self_intersection_profile(disjoint);
    const auto report = small_self_intersection_check(profile, 2, n, 2, 0.5);
    CHECK(report.holds);
    CHECK(std::isinf(report.epsilon0));
}

TEST_CASE("intersect_tuples") {
    const UniverseSize n(6);
    const TupleSet x(n, 2, {0, 1, 0, 5, 2, 1});
    CHECK(intersect_tuples(SubsetSample(n, {0, 1, 2}), x) == 2);
    CHECK(intersect_tuples(SubsetSample(n, {}), x) == 0);
    std::vector<Element> all;
    for (Element i = 0; i < 6; ++i) all.push_back(i);
    CHECK(intersect_tuples(SubsetSample(n, all), x) == x.size());
    CHECK_THROWS_AS(intersect_tuples(SubsetSample(UniverseSize(7), {0}), x), std::domain_error);

    std::vector<std::uint64_t> witnesses;
    intersect_tuples(SubsetSample(n, {0, 1, 2}), x, &witnesses, 10);
    CHECK(witnesses == std::vector<std::uint64_t>{0, 2});
}

TEST_CASE("arity-1 tuple sets reduce to plain intersection") {
    const UniverseSize n(9);
    const TupleSet x(n, 1, {1, 3, 5, 8});
    const SubsetSample a(n, {1, 2, 3, 4});
    CHECK(intersect_tuples(a, x) == intersect(a, SubsetSample(n, {1, 3, 5, 8})).size());
}

TEST_CASE("multidim moments equal exhaustive enumeration over all samples") {
    // all C(n, ka) samples are equiprobable, so mean and variance of the
    // tuple count follow by direct enumeration
    struct Case {
        unsigned n;
        unsigned ka;
        unsigned k;
        std::uint64_t size_x;
    };
    for (const Case c : {Case{7, 3, 2, 12}, Case{7, 4, 3, 9}, Case{6, 3, 2, 10}}) {
        const UniverseSize n(c.n);
        const TupleSet x = sample_distinct_tuples(n, c.k, c.size_x, {c.n, c.k});
        const auto profile = self_intersection_profile(x);

        double s1 = 0.0;
        double s2 = 0.0;
        std::uint64_t total = 0;
        for (std::uint32_t mask = 0; mask < (1u << c.n); ++mask) {
            if (static_cast<unsigned>(__builtin_popcount(mask)) != c.ka) continue;
            std::vector<Element> members;
            for (unsigned b = 0; b < c.n; ++b)
                if (mask & (1u << b)) members.push_back(b);
            const auto count =
                static_cast<double>(intersect_tuples(SubsetSample(n, members), x));
            s1 += count;
            s2 += count * count;
            ++total;
        }
        const double mean = s1 / static_cast<double>(total);
        const double var = s2 / static_cast<double>(total) - mean * mean;

        const MomentPair m = multidim_moments_uniform(profile, x.size(), n, c.ka, c.k);
        CHECK(m.mean == doctest::Approx(mean).epsilon(1e-10));
        CHECK(m.variance == doctest::Approx(var).epsilon(1e-8));
    }
}

TEST_CASE("monte carlo mean agreement at n=30") {
    const UniverseSize n(30);
    const TupleSet x = sample_distinct_tuples(n, 2, 200, {7, 7});
    const auto profile = self_intersection_profile(x);
    const std::uint64_t ka = 12;
    const MomentPair m = multidim_moments_uniform(profile, x.size(), n, ka, 2);

    const int trials = 10000;
    double total = 0.0;
    for (int t = 0; t < trials; ++t) {
        const SubsetSample a = sample_uniform(n, ka, {606, static_cast<std::uint64_t>(t)});
        total += static_cast<double>(intersect_tuples(a, x));
    }
    const double empirical = total / trials;
    const double sigma = std::sqrt(m.variance / trials);
    CHECK(std::abs(empirical - m.mean) <= 4.0 * sigma);
}

TEST_CASE("star intersection count shortcut") {
    const UniverseSize n(50);
    const SubsetSample with_center(n, {0, 4, 9});
    const SubsetSample without(n, {4, 9});
    CHECK(star_intersection_count(with_center, 0) == 2);
    CHECK(star_intersection_count(without, 0) == 0);
}

TEST_CASE("sample_distinct_tuples is deterministic and well-formed") {
    const UniverseSize n(20);
    const TupleSet a = sample_distinct_tuples(n, 3, 120, {5, 6});
    const TupleSet b = sample_distinct_tuples(n, 3, 120, {5, 6});
    CHECK(a.flat() == b.flat());
    CHECK(a.size() == 120);
}
