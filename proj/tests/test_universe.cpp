#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "randset/universe.hpp"

using namespace randset;

TEST_CASE("density_of basics") {
    CHECK(density_of(10, UniverseSize(100)).value() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(density_of(0, UniverseSize(1000)).is_neg_infinity());
    CHECK(density_of(100, UniverseSize(100)).value() == doctest::Approx(1.0));
    CHECK(density_of(1, UniverseSize(7)).value() == doctest::Approx(0.0));
    CHECK_THROWS_AS(density_of(11, UniverseSize(10)), std::domain_error);
    CHECK_THROWS_AS(UniverseSize(1), std::domain_error);
}

TEST_CASE("density_of is monotone in cardinality") {
    const UniverseSize n(53);
    double prev = -1.0;
    for (std::uint64_t c = 1; c <= 53; ++c) {
        const double d = density_of(c, n).value();
        CHECK(d >= prev);
        prev = d;
    }
}

TEST_CASE("codensity") {
    CHECK(codensity(Density::of(0.3)).value() == doctest::Approx(0.7));
    CHECK(codensity(Density::of(1.0)).value() == doctest::Approx(0.0));
    CHECK_THROWS_AS(codensity(Density::neg_infinity()), std::domain_error);
}

TEST_CASE("set operations") {
    const UniverseSize n(5);
    const SubsetSample a(n, {1, 2, 3});
    const SubsetSample b(n, {2, 3, 4});
    CHECK(intersect(a, b).members() == std::vector<Element>{2, 3});
    CHECK(complement(SubsetSample(n, {})).members() == std::vector<Element>{0, 1, 2, 3, 4});
    const SubsetSample single(n, {0});
    CHECK(unite(single, single).members() == std::vector<Element>{0});
    CHECK(complement(a).size() == n.n - a.size());

    const SubsetSample other(UniverseSize(6), {1});
    CHECK_THROWS_AS(intersect(a, other), std::domain_error);
}

TEST_CASE("subset sample invariants") {
    const UniverseSize n(5);
    CHECK_THROWS_AS(SubsetSample(n, {3, 2}), std::domain_error);
    CHECK_THROWS_AS(SubsetSample(n, {2, 2}), std::domain_error);
    CHECK_THROWS_AS(SubsetSample(n, {5}), std::domain_error);
}

TEST_CASE("De Morgan identities on samples") {
    const UniverseSize n(9);
    // every subset pair over a few fixed masks
    const std::vector<std::vector<Element>> sets = {
        {}, {0}, {1, 3, 5}, {0, 1, 2, 3, 4, 5, 6, 7, 8}, {2, 8}, {0, 4, 6, 7}};
    for (const auto& ma : sets) {
        for (const auto& mb : sets) {
            const SubsetSample a(n, ma);
            const SubsetSample b(n, mb);
            const auto lhs = complement(intersect(a, b));
            const auto rhs = unite(complement(a), complement(b));
            CHECK(lhs.members() == rhs.members());
            const auto lhs2 = complement(unite(a, b));
            const auto rhs2 = intersect(complement(a), complement(b));
            CHECK(lhs2.members() == rhs2.members());
        }
    }
}

TEST_CASE("complement cardinality bound at fixed alpha") {
    // finite-n form of dens(E \ A) = 1: |a| <= n^alpha implies
    // |complement| >= n - n^alpha
    const UniverseSize n(1000);
    const double alpha = 0.7;
    const auto limit = static_cast<std::uint64_t>(std::pow(1000.0, alpha));
    std::vector<Element> members;
    for (std::uint64_t i = 0; i < limit; ++i) members.push_back(i * 2);
    const SubsetSample a(n, members);
    CHECK(static_cast<double>(complement(a).size()) >=
          1000.0 - std::pow(1000.0, alpha));
}
